#include <doctest.h>

#include <sstream>

#include "rcat/io.hpp"
#include "rcat/par.hpp"
#include "support.hpp"

using namespace rcat;
using rcat::testing::Table;

namespace {

std::string golden(const std::string& name) { return io::read_file(std::string(RCAT_TEST_DATA) + "/" + name); }

// "s>t:v0,v1" read back by hand
struct Named {
  int src, tgt;
  Table t;
};

Named parse_name(const std::string& s) {
  Named n{};
  auto gt = s.find('>'), colon = s.find(':');
  n.src = std::stoi(s.substr(0, gt));
  n.tgt = std::stoi(s.substr(gt + 1, colon - gt - 1));
  std::stringstream ss(s.substr(colon + 1));
  std::string tok;
  while (std::getline(ss, tok, ','))
    n.t.push_back(tok == "-" ? std::nullopt : std::optional<int>(std::stoi(tok)));
  return n;
}

std::string name_of(int src, int tgt, const Table& t) {
  std::string s = std::to_string(src) + ">" + std::to_string(tgt) + ":";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + (t[i] ? std::to_string(*t[i]) : std::string("-"));
  return s;
}

Instance par_instance(int n) {
  Instance in;
  in.x = par_to_rcat(n);
  in.cp = par_coproducts(in.x, n);
  in.rp = par_products(in.x, n);
  in.has_coproducts = in.has_products = true;
  return in;
}

std::string what_of(const std::string& text) {
  try {
    io::parse_category(text);
  } catch (const MalformedTable& e) {
    return e.what();
  }
  return "";
}

const char* kTiny = R"({
  "objects": ["A", "B"],
  "morphisms": [{"name": "1A", "dom": "A", "cod": "A"}, {"name": "1B", "dom": "B", "cod": "B"},
                {"name": "f", "dom": "A", "cod": "B"}],
  "identity": {"A": "1A", "B": "1B"},
  "compose": [["1A", "1A", "1A"], ["1B", "1B", "1B"], ["f", "1A", "f"], ["1B", "f", "f"]],
  "restriction": {"1A": "1A", "1B": "1B", "f": "1A"}
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto p = s.find(from);
  REQUIRE(p != std::string::npos);
  return s.replace(p, from.size(), to);
}

}  // namespace

TEST_CASE("golden Par<=3 file agrees with hand composition of the names") {
  auto in = io::parse_category(golden("par3.json"));
  const auto& c = in.x.base();
  CHECK(c.num_objects() == 4);
  // Σ_{a,b<=3} (b+1)^a partial maps
  std::size_t expect = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) {
      std::size_t p = 1;
      for (int i = 0; i < a; ++i) p *= b + 1;
      expect += p;
    }
  CHECK(c.num_morphisms() == expect);
  std::size_t pairs = 0;
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    auto nf = parse_name(c.name(f));
    CHECK(c.obj_name(c.dom(f)) == std::to_string(nf.src));
    CHECK(c.name(in.x.rst(f)) == name_of(nf.src, nf.src, testing::oracle_domain(nf.t)));
    for (MorId g : c.out(c.cod(f))) {
      auto ng = parse_name(c.name(g));
      ++pairs;
      if (c.name(c.compose(g, f)) != name_of(nf.src, ng.tgt, testing::oracle_compose(ng.t, nf.t)))
        FAIL("composite of " << c.name(g) << " and " << c.name(f));
    }
  }
  CHECK(pairs > 0);
  // 1+2 = 3 with inl = 1>3:0 and inr = 2>3:1,2
  auto s = in.cp.find(c.find_object("1"), c.find_object("2"));
  REQUIRE(s);
  CHECK(c.obj_name(s->sum) == "3");
  CHECK(c.name(s->inl) == "1>3:0");
  CHECK(c.name(s->inr) == "2>3:1,2");
  auto p = in.rp.find(c.find_object("1"), c.find_object("3"));
  REQUIRE(p);
  CHECK(c.name(p->q) == "3>3:0,1,2");
}

TEST_CASE("category files round-trip byte for byte") {
  auto text = golden("par3.json");
  CHECK(io::format_category(io::parse_category(text)) == text);
  CHECK(io::format_category(par_instance(3)) == text);
  CHECK(io::format_category(par_instance(2)) == golden("par2.json"));
  auto tiny = io::parse_category(kTiny);
  CHECK(tiny.x.rst(tiny.x.base().find_morphism("f")) == tiny.x.base().find_morphism("1A"));
  auto again = io::format_category(tiny);
  CHECK(io::format_category(io::parse_category(again)) == again);
}

TEST_CASE("a missing restriction is the trivial one") {
  std::string text = kTiny;
  text = replace(text, ",\n  \"restriction\": {\"1A\": \"1A\", \"1B\": \"1B\", \"f\": \"1A\"}", "");
  auto in = io::parse_category(text);
  CHECK(in.x.rst(in.x.base().find_morphism("f")) == in.x.base().find_morphism("1A"));
  CHECK_FALSE(in.has_coproducts);
}

TEST_CASE("loader errors name the offending position") {
  std::string t = kTiny;
  CHECK(what_of(replace(t, "\"cod\": \"B\"}]", "\"cod\": \"C\"}]")).find("morphisms[2].cod") == 0);
  CHECK(what_of(replace(t, "[\"1B\", \"f\", \"f\"]", "[\"1B\", \"f\", \"g\"]")).find("compose[3][2]") == 0);
  CHECK(what_of(replace(t, ", [\"1B\", \"f\", \"f\"]", "")).find("compose: missing entry for (1B, f)") == 0);
  CHECK(what_of(replace(t, "[\"f\", \"1A\", \"f\"]", "[\"f\", \"1B\", \"f\"]")).find("compose[2]") == 0);
  CHECK(what_of(replace(t, "\"B\": \"1B\"}", "\"B\": \"f\"}")).find("identity.B") == 0);
  CHECK(what_of(replace(t, ", \"B\": \"1B\"}", "}")).find("identity: missing entry") == 0);
  CHECK(what_of(replace(t, "\"f\": \"1A\"}", "\"f\": \"1B\"}")).find("restriction.f") == 0);
  CHECK(what_of(replace(t, "\"objects\": [\"A\", \"B\"]", "\"objects\": [\"A\", \"A\"]")).find("objects[1]") == 0);
  CHECK(what_of(replace(t, "{\"name\": \"f\"", "{\"name\": \"1A\"")).find("morphisms[2].name") == 0);
  CHECK(what_of(replace(t, "\"objects\"", "\"objectz\"")).find("objectz: unknown field") == 0);
  auto syntax = what_of("{\n  \"objects\": [\"A\",\n}");
  CHECK(syntax.find("line 3, column 1") != std::string::npos);
  auto cop = replace(t, "\n}", ",\n  \"coproducts\": [{\"left\": \"A\", \"right\": \"A\", \"sum\": \"B\", \"inl\": \"1A\", \"inr\": \"f\"}]\n}");
  CHECK(what_of(cop).find("coproducts[0].inl") == 0);
}

TEST_CASE("distributive files round-trip and are validated") {
  auto d = finset_dist_table(2);
  auto text = io::format_distributive(d);
  auto back = io::parse_distributive(text);
  CHECK(io::format_distributive(back) == text);
  CHECK(back.dist_inv_table().size() == d.dist_inv_table().size());
  // point a δ⁻¹ entry at the wrong map
  auto p = text.find("\"map\": \"");
  REQUIRE(p != std::string::npos);
  auto end = text.find('"', p + 8);
  std::string name = text.substr(p + 8, end - p - 8);
  auto nm = parse_name(name);
  // a different total map with the same type: shift every value
  Table shifted;
  for (auto& v : nm.t) shifted.push_back(std::optional<int>((*v + 1) % nm.tgt));
  std::string other = name_of(nm.src, nm.tgt, shifted);
  if (other != name) {
    std::string broken = text.substr(0, p + 8) + other + text.substr(end);
    CHECK_THROWS_AS(io::parse_distributive(broken), InvalidDistributiveData);
  }
  std::string missing = text.substr(0, text.find(",\n  \"dist_inv\"")) + "\n}\n";
  CHECK_THROWS_AS(io::parse_distributive(missing), InvalidDistributiveData);
  CHECK_THROWS_WITH_AS(io::parse_category(text), doctest::Contains("dist_inv"), MalformedTable);
}

TEST_CASE("matrix text form") {
  auto in = par_instance(2);
  auto v = in.view();
  const auto& c = in.x.base();
  auto one = c.find_object("1");
  MorId swap = c.find_morphism("2>2:1,0");
  auto m = matrix_decompose(v, swap, {one, one}, {one, one});
  auto text = io::format_matrix(v, m);
  CHECK(text == "rows=1+1 cols=1+1\n1>1:- 1>1:0\n1>1:0 1>1:-\nwitness 1>2:1 1>2:0\n");
  CHECK(io::parse_matrix(v, text) == m);
  // witnesses are searched for when omitted
  CHECK(io::parse_matrix(v, "rows=1+1 cols=1+1\n1>1:- 1>1:0\n1>1:0 1>1:-\n") == m);
  CHECK_THROWS_WITH_AS(io::parse_matrix(v, "rows=1+1 cols=1+1\n1>1:- 1>1:0\n1>1:0 2>1:-,-\n"),
                       doctest::Contains("line 3"), MalformedTable);
  CHECK_THROWS_WITH_AS(io::parse_matrix(v, "rows=1+1 cols=1+7\n"), doctest::Contains("cols"),
                       MalformedTable);
  CHECK_THROWS_AS(io::parse_matrix(v, "rows=1 cols=1+1\n1>1:0 1>1:0\n"), InvalidWitness);
}

TEST_CASE("diagram files") {
  auto in = par_instance(2);
  auto v = in.view();
  const char* cospan = R"({"nodes": ["x", "y", "z"],
    "arrows": [{"name": "u", "from": "x", "to": "z"}, {"name": "w", "from": "y", "to": "z"}],
    "assignment": {"x": "2", "y": "1", "z": "1", "u": "2>1:0,-", "w": "1>1:0"}})";
  auto d = io::parse_diagram(v, cospan);
  CHECK(d.node_labels == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(d.diagram.arrows.size() == 2);
  CHECK(d.diagram.arrows[0].from == 0);
  CHECK(d.diagram.arrows[0].to == 2);
  CHECK(v.name(d.diagram.arrows[0].map) == "2>1:0,-");
  std::string s = cospan;
  CHECK_THROWS_WITH_AS(io::parse_diagram(v, replace(s, "\"u\": \"2>1:0,-\"", "\"u\": \"1>1:0\"")),
                       doctest::Contains("assignment.u"), MalformedTable);
  CHECK_THROWS_WITH_AS(io::parse_diagram(v, replace(s, "\"to\": \"z\"}, {", "\"to\": \"q\"}, {")),
                       doctest::Contains("arrows[0].to"), MalformedTable);
  CHECK_THROWS_WITH_AS(io::parse_diagram(v, replace(s, "\"z\": \"1\",", "\"z\": \"1\", \"k\": \"1\",")),
                       doctest::Contains("assignment.k"), MalformedTable);
}
