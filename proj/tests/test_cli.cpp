#include <doctest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "rcat/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Out {
  int code;
  std::string out, err;
};

Out rcat_run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = rcat::cli::run(args, o, e);
  return {code, o.str(), e.str()};
}

std::string data(const std::string& name) { return std::string(RCAT_TEST_DATA) + "/" + name; }

std::string scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / "rcat_test_cli";
  fs::create_directories(dir);
  return (dir / name).string();
}

nlohmann::json json_of(const Out& o) { return nlohmann::json::parse(o.out); }

}  // namespace

TEST_CASE("check on the golden Par<=3 file passes") {
  auto r = rcat_run({"check", data("par3.json"), "--coproducts", "--zero", "--products", "--json"});
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["status"] == "pass");
  CHECK(j["result"]["morphisms"] == 144);
  CHECK(j["checks"].size() == 5);
  CHECK(j["violations"].empty());
  CHECK_FALSE(j.contains("timing_ms"));
}

TEST_CASE("decide on a nowhere-defined map gives the nowhere-defined decision") {
  auto r = rcat_run({"decide", data("par2.json"), "--morphism", "1>2:-", "--coproduct", "1+1", "--json"});
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["result"]["decision"] == "1>2:-");
  CHECK(j["result"]["unique"] == true);
  auto t = rcat_run({"decide", data("par2.json"), "--morphism", "1>2:1", "--coproduct", "1+1"});
  CHECK(t.code == 0);
  CHECK(t.out.find("decision: 1>2:1\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(rcat_run({"check", data("missing.json")}).code == 2);
  CHECK(rcat_run({}).code == 2);
  CHECK(rcat_run({"check"}).code == 2);
  CHECK(rcat_run({"decide", data("par2.json"), "--morphism", "nope", "--coproduct", "1+1"}).code == 2);
  CHECK(rcat_run({"decide", data("par2.json"), "--morphism", "1>1:0", "--coproduct", "1+1"}).code == 2);
  CHECK(rcat_run({"--help"}).code == 0);
  // the truncated counterexample fails extensivity
  auto cx = scratch("cx.json");
  REQUIRE(rcat_run({"example", "counterexample", "-o", cx}).code == 0);
  auto r = rcat_run({"extensive", cx, "--json"});
  CHECK(r.code == 1);
  auto j = json_of(r);
  CHECK(j["status"] == "fail");
  CHECK(j["violations"][0]["tag"] == "no-decision");
  CHECK(j["violations"][0]["witness"][0] == "C>2:0,0,1");
  // malformed input in --json mode still yields one document
  auto bad = scratch("bad.json");
  rcat::io::write_file(bad, "{\"objects\": [\"A\"], \"morphisms\": 3}");
  auto b = rcat_run({"check", bad, "--json"});
  CHECK(b.code == 2);
  CHECK(json_of(b)["status"] == "error");
  CHECK(json_of(b)["error"].get<std::string>().find("morphisms: expected an array") != std::string::npos);
}

TEST_CASE("complete --finset 2 emits a 7-object extensive category") {
  auto out = scratch("complete2.json");
  auto r = rcat_run({"complete", "--finset", "2", "-o", out, "--json"});
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["result"]["objects"] == 7);
  CHECK(j["artifact"] == out);
  CHECK(rcat_run({"extensive", out}).code == 0);
  CHECK(rcat_run({"check", out, "--coproducts", "--products"}).code == 0);
}

TEST_CASE("every emitted category re-passes check") {
  std::vector<std::vector<std::string>> makers = {
      {"example", "par", "--size", "2"},
      {"example", "trivial"},
      {"example", "f2vect"},
      {"split", data("par2.json")},
      {"total", data("par2.json")},
      {"complete", "--finset", "1"},
  };
  int k = 0;
  for (auto m : makers) {
    auto path = scratch("emit" + std::to_string(k++) + ".json");
    m.push_back("-o");
    m.push_back(path);
    INFO(m[0]);
    REQUIRE(rcat_run(m).code == 0);
    CHECK(rcat_run({"check", path}).code == 0);
    // re-emitting the loaded file changes nothing
    CHECK(rcat::io::format_category(rcat::io::parse_category(rcat::io::read_file(path))) ==
          rcat::io::read_file(path));
  }
  // split output can be split again
  auto s1 = scratch("s1.json"), s2 = scratch("s2.json");
  REQUIRE(rcat_run({"split", data("par2.json"), "-o", s1}).code == 0);
  REQUIRE(rcat_run({"split", s1, "-o", s2}).code == 0);
  CHECK(rcat_run({"check", s2}).code == 0);
}

TEST_CASE("output is byte-stable") {
  std::vector<std::vector<std::string>> cmds = {
      {"check", data("par3.json"), "--json"},
      {"complete", "--finset", "2", "--json"},
      {"lattice", data("par3.json"), "1"},
      {"split", data("par2.json")},
  };
  for (auto& c : cmds) {
    auto a = rcat_run(c), b = rcat_run(c);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
  }
  auto t = rcat_run({"check", data("par2.json"), "--json", "--timing"});
  CHECK(json_of(t).contains("timing_ms"));
}

TEST_CASE("matrix verbs chain through files") {
  auto m = scratch("m.txt"), p = scratch("p.txt");
  REQUIRE(rcat_run({"matrix", "decompose", data("par2.json"), "--morphism", "2>2:1,0", "--rows", "1+1",
                    "--cols", "1+1", "-o", m})
              .code == 0);
  auto r = rcat_run({"matrix", "recompose", data("par2.json"), "--matrix", m});
  CHECK(r.code == 0);
  CHECK(r.out.find("morphism: 2>2:1,0") != std::string::npos);
  REQUIRE(rcat_run({"matrix", "multiply", data("par2.json"), "--left", m, "--right", m, "-o", p}).code == 0);
  // the swap squared is the identity
  auto id = rcat_run({"matrix", "recompose", data("par2.json"), "--matrix", p});
  CHECK(id.out.find("morphism: 2>2:0,1") != std::string::npos);
}

TEST_CASE("limits and lattice verbs") {
  auto a = rcat_run({"limits", data("par2.json"), "--arrow", "2>1:0,-", "--json"});
  CHECK(a.code == 0);
  CHECK(json_of(a)["result"]["object"] == "1");
  auto d = scratch("cospan.json");
  rcat::io::write_file(d, R"({"nodes": ["x", "y", "z"],
    "arrows": [{"name": "u", "from": "x", "to": "z"}, {"name": "w", "from": "y", "to": "z"}],
    "assignment": {"x": "2", "y": "1", "z": "1", "u": "2>1:0,-", "w": "1>1:0"}})");
  auto l = rcat_run({"limits", data("par2.json"), "--diagram", d, "--json"});
  CHECK(l.code == 0);
  CHECK(json_of(l)["result"]["object"] == "1");
  auto lat = rcat_run({"lattice", data("par3.json"), "1", "--json"});
  CHECK(lat.code == 0);
  auto j = json_of(lat);
  CHECK(j["result"]["elements"].size() == 2);
  CHECK(j["result"]["bottom"] == "1>1:-");
}

TEST_CASE("RCAT_CAP overrides the size cap") {
  setenv("RCAT_CAP", "10", 1);
  auto r = rcat_run({"check", data("par2.json"), "--json"});
  unsetenv("RCAT_CAP");
  CHECK(r.code == 1);
  CHECK(json_of(r)["status"] == "truncated");
  setenv("RCAT_CAP", "ten", 1);
  auto bad = rcat_run({"check", data("par2.json")});
  unsetenv("RCAT_CAP");
  CHECK(bad.code == 2);
}
