#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "rcat/extensive.hpp"
#include "rcat/io.hpp"
#include "rcat/kleisli.hpp"
#include "rcat/par.hpp"
#include "rcat/products.hpp"
#include "rcat/total.hpp"

namespace rcat::cli {

using ojson = nlohmann::ordered_json;

namespace {

// malformed input or arguments: exit 2
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Section {
  std::string name;
  LawReport rep;
};

struct Run {
  std::vector<std::string> command;
  bool json = false, timing = false;
  CheckOptions opts;
  std::optional<std::size_t> env_cap;
  std::string output;

  std::vector<Section> sections;
  ojson result = ojson::object();
  std::optional<std::string> artifact_path;
  std::optional<std::string> artifact_text;
  std::string artifact_key;
  bool artifact_is_json = false;

  std::size_t cap(std::size_t dflt) const { return env_cap.value_or(dflt); }
  void add(std::string name, LawReport rep) { sections.push_back({std::move(name), std::move(rep)}); }
  void emit(const std::string& key, const std::string& text, bool is_json) {
    if (!output.empty()) {
      io::write_file(output, text);
      artifact_path = output;
    } else {
      artifact_text = text;
    }
    artifact_key = key;
    artifact_is_json = is_json;
  }

  Status status() const {
    Status s = Status::Pass;
    for (auto& sec : sections) {
      if (sec.rep.status == Status::Fail || !sec.rep.violations.empty()) return Status::Fail;
      if (sec.rep.status == Status::Truncated) s = Status::Truncated;
    }
    return s;
  }
};

std::string error_tag(const Error& e) {
#define RCAT_TAG(T, s) \
  if (dynamic_cast<const T*>(&e)) return s
  RCAT_TAG(NoZero, "no-zero");
  RCAT_TAG(NoDecision, "no-decision");
  RCAT_TAG(InvalidWitness, "invalid-witness");
  RCAT_TAG(MissingBinaryDecision, "missing-binary-decision");
  RCAT_TAG(NoProducts, "no-products");
  RCAT_TAG(NotSplit, "not-split");
  RCAT_TAG(NoTotalLimit, "no-total-limit");
  RCAT_TAG(NotSeparable, "not-separable");
  RCAT_TAG(StructureError, "structure-error");
  RCAT_TAG(AssertionFailure, "assertion-failure");
  RCAT_TAG(ShapeMismatch, "shape-mismatch");
  RCAT_TAG(NotParallel, "not-parallel");
  RCAT_TAG(UnknownMorphism, "unknown-morphism");
  RCAT_TAG(UnknownObject, "unknown-object");
#undef RCAT_TAG
  return "error";
}

std::string read_input(const std::string& path) {
  try {
    return io::read_file(path);
  } catch (const MalformedTable& e) {
    throw InputError(e.what());
  }
}

// positional loader errors are reported with the file name in front
template <class F>
auto load(const std::string& path, F&& parse) {
  std::string text = read_input(path);
  try {
    return parse(text);
  } catch (const MalformedTable& e) {
    throw InputError(path + ": " + e.what());
  } catch (const InvalidDistributiveData& e) {
    throw InputError(path + ": " + e.what());
  }
}

Instance load_category(const std::string& path) {
  return load(path, [](const std::string& t) { return io::parse_category(t); });
}

MorId morphism(const FinView& v, const std::string& name, const std::string& opt) {
  if (!v.cat().has_morphism(name)) throw InputError(opt + ": unknown morphism \"" + name + "\"");
  return v.cat().find_morphism(name);
}

ObjId object(const FinView& v, const std::string& name, const std::string& opt) {
  try {
    return v.cat().find_object(name);
  } catch (const UnknownObject&) {
    throw InputError(opt + ": unknown object \"" + name + "\"");
  }
}

std::vector<ObjId> objects(const FinView& v, const std::string& text, const std::string& opt) {
  try {
    return io::parse_object_sum(v.cat(), text, opt);
  } catch (const MalformedTable& e) {
    throw InputError(e.what());
  }
}

void need_coproducts(const Instance& in, const std::string& path) {
  if (!in.has_coproducts) throw InputError(path + ": the file declares no coproducts");
}

void need_products(const Instance& in, const std::string& path) {
  if (!in.has_products) throw InputError(path + ": the file declares no products");
}

ojson names(const FinView& v, const std::vector<MorId>& ms) {
  ojson a = ojson::array();
  for (auto m : ms) a.push_back(v.name(m));
  return a;
}

std::size_t count_morphisms(const FinRCat& x) { return x.base().num_morphisms(); }

// ---- verbs --------------------------------------------------------------

struct CheckArgs {
  std::string file;
  bool coproducts = false, zero = false, products = false;
  std::size_t samples = 0;
};

void do_check(Run& r, const CheckArgs& a) {
  Instance in = load_category(a.file);
  if (a.coproducts || a.zero) need_coproducts(in, a.file);
  if (a.products) need_products(in, a.file);
  auto v = in.view();
  CheckOptions o = r.opts;
  if (a.samples) o.samples = a.samples;
  r.add("category", check_category_laws(in.x.base(), o));
  r.add("restriction", check_restriction_axioms(v, o));
  if (a.coproducts) {
    auto rep = in.cp.verify(in.x.base(), o);
    rep.merge(check_restriction_coproducts(v, o));
    r.add("coproducts", rep);
  }
  if (a.zero) r.add("zero", check_restriction_zero(v, o));
  if (a.products) r.add("products", check_restriction_products(v, o));
  r.result["objects"] = in.x.base().num_objects();
  r.result["morphisms"] = count_morphisms(in.x);
}

struct DecideArgs {
  std::string file, morphism, coproduct;
};

void do_decide(Run& r, const DecideArgs& a) {
  Instance in = load_category(a.file);
  need_coproducts(in, a.file);
  auto v = in.view();
  MorId f = morphism(v, a.morphism, "--morphism");
  auto parts = objects(v, a.coproduct, "--coproduct");
  auto s = nsum(v, parts);
  if (!s) throw InputError("--coproduct: " + a.coproduct + " is not a chosen coproduct in the file");
  if (v.cod(f) != s->total)
    throw InputError("--morphism: " + a.morphism + " does not land in " + a.coproduct);
  r.result["morphism"] = a.morphism;
  r.result["coproduct"] = a.coproduct;
  LawReport rep;
  auto d = find_decision(v, f, parts);
  rep.checked = 1;
  if (!d) {
    rep.fail(r.opts, "no-decision", {a.morphism});
    r.result["decision"] = nullptr;
  } else {
    r.result["decision"] = v.name(d->h);
    r.result["unique"] = d->unique;
    r.result["candidates"] = d->candidates;
    r.result["characterizations_agree"] = d->characterizations_agree;
    if (!d->unique) rep.fail(r.opts, "decision-not-unique", {a.morphism});
    if (!d->characterizations_agree) rep.fail(r.opts, "characterizations-disagree", {a.morphism});
  }
  r.add("decision", rep);
}

struct MatrixArgs {
  std::string op, file, morphism, rows, cols, matrix, left, right;
};

PartialMatrix<FinView> load_matrix(const FinView& v, const std::string& path) {
  return load(path, [&](const std::string& t) { return io::parse_matrix(v, t); });
}

void do_matrix(Run& r, const MatrixArgs& a) {
  Instance in = load_category(a.file);
  need_coproducts(in, a.file);
  auto v = in.view();
  LawReport rep;
  rep.checked = 1;
  if (a.op == "decompose") {
    if (a.morphism.empty() || a.rows.empty() || a.cols.empty())
      throw InputError("matrix decompose needs --morphism, --rows and --cols");
    MorId f = morphism(v, a.morphism, "--morphism");
    auto m = matrix_decompose(v, f, objects(v, a.rows, "--rows"), objects(v, a.cols, "--cols"));
    // Ψ(Φ f) = f
    if (matrix_recompose(v, m) != f) rep.fail(r.opts, "recompose-mismatch", {a.morphism});
    r.add("roundtrip", rep);
    r.emit("matrix", io::format_matrix(v, m), false);
  } else if (a.op == "recompose") {
    if (a.matrix.empty()) throw InputError("matrix recompose needs --matrix");
    auto m = load_matrix(v, a.matrix);
    MorId f = matrix_recompose(v, m);
    // Φ(Ψ m) = m
    if (!(matrix_decompose(v, f, m.rows, m.cols) == m))
      rep.fail(r.opts, "decompose-mismatch", {v.name(f)});
    r.add("roundtrip", rep);
    r.result["morphism"] = v.name(f);
  } else {
    if (a.left.empty() || a.right.empty()) throw InputError("matrix multiply needs --left and --right");
    auto g = load_matrix(v, a.left), f = load_matrix(v, a.right);
    auto gf = matrix_multiply(v, g, f);
    // the product is the matrix of the composite
    auto comp = v.compose(matrix_recompose(v, g), matrix_recompose(v, f));
    if (!(matrix_decompose(v, comp, gf.rows, gf.cols) == gf))
      rep.fail(r.opts, "product-mismatch", {v.name(comp)});
    r.add("composite", rep);
    r.emit("matrix", io::format_matrix(v, gf), false);
  }
}

struct FileArgs {
  std::string file;
};

void do_split(Run& r, const FileArgs& a) {
  Instance in = load_category(a.file);
  auto v = in.view();
  auto m = split_idempotents(v, r.cap(10000));
  auto mv = m.view();
  r.add("restriction", check_restriction_axioms(mv, r.opts));
  r.add("idempotents-split", check_idempotents_split(mv, r.opts));
  r.result["objects"] = m.rcat.base().num_objects();
  r.result["morphisms"] = count_morphisms(m.rcat);
  r.emit("category",
         io::format_category(m.rcat, m.has_coproducts ? &m.cp : nullptr,
                             m.has_products ? &m.rp : nullptr),
         true);
}

void do_total(Run& r, const FileArgs& a) {
  Instance in = load_category(a.file);
  auto sub = total_subcategory(in.x);
  std::map<MorId, MorId> back;
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    back[sub.to_parent[i]] = static_cast<MorId>(i);
  auto here = [&](MorId m) { return back.count(m) != 0; };
  Instance out;
  out.x = FinRCat::trivial(sub.cat);
  // chosen (co)products whose structure maps are total carry over unchanged
  if (in.has_coproducts) {
    std::map<std::pair<ObjId, ObjId>, CoproductStructure::Sum> sums;
    for (auto& [ab, s] : in.cp.sums())
      if (here(s.inl) && here(s.inr)) sums[ab] = {s.sum, back[s.inl], back[s.inr]};
    out.cp = CoproductStructure(out.x.base(), std::move(sums), in.cp.initial());
    out.has_coproducts = true;
  }
  if (in.has_products) {
    std::map<std::pair<ObjId, ObjId>, ProductStructure::Prod> prods;
    for (auto& [ab, p] : in.rp.prods)
      if (here(p.p) && here(p.q)) prods[ab] = {p.prod, back[p.p], back[p.q]};
    out.rp = ProductStructure::from_projections(out.x, std::move(prods), in.rp.terminal);
    out.has_products = true;
  }
  r.add("category", check_category_laws(out.x.base(), r.opts));
  r.result["objects"] = out.x.base().num_objects();
  r.result["morphisms"] = count_morphisms(out.x);
  r.emit("category", io::format_category(out), true);
}

struct CompleteArgs {
  int finset = -1;
  std::string file;
};

template <DistributiveCategory D>
void complete_from(Run& r, const D& d) {
  CompletionOptions co;
  co.kleisli.base = r.opts;
  co.kleisli.cap = r.cap(co.kleisli.cap);
  co.cap = r.cap(co.cap);
  auto c = extensive_completion(d, co);
  r.add("extensive", c.extensive);
  r.add("products", c.products);
  r.add("functor", c.functor);
  r.add("preservation", c.preservation);
  // recorded, not asserted: N is an equivalence only when the input is already extensive
  r.result["equivalence"] = to_string(c.equivalence.status);
  const auto& m = *c.total;
  r.result["objects"] = m.rcat.base().num_objects();
  r.result["morphisms"] = count_morphisms(m.rcat);
  r.emit("category",
         io::format_category(m.rcat, m.has_coproducts ? &m.cp : nullptr,
                             m.has_products ? &m.rp : nullptr),
         true);
}

void do_complete(Run& r, const CompleteArgs& a) {
  if ((a.finset >= 0) == !a.file.empty()) throw InputError("complete needs exactly one of --finset N or --file");
  if (a.finset >= 0) {
    complete_from(r, FinSetCat(a.finset));
  } else {
    auto d = load(a.file, [](const std::string& t) { return io::parse_distributive(t); });
    complete_from(r, d);
  }
}

struct LimitsArgs {
  std::string file, diagram, arrow;
  std::vector<std::string> equalizer;
};

void do_limits(Run& r, const LimitsArgs& a) {
  Instance in = load_category(a.file);
  auto v = in.view();
  int modes = !a.diagram.empty() + !a.arrow.empty() + !a.equalizer.empty();
  if (modes != 1) throw InputError("limits needs exactly one of --diagram, --arrow, --equalizer");
  if (!a.arrow.empty()) {
    MorId f = morphism(v, a.arrow, "--arrow");
    auto l = restriction_limit_of_arrow(v, f, r.opts);
    if (!l) throw NotSplit("the restriction of " + a.arrow + " does not split");
    r.result["object"] = v.obj_name(l->obj);
    r.result["p"] = v.name(l->p);
    r.result["s"] = v.name(l->s);
    r.add("universal", l->universal);
  } else if (!a.diagram.empty()) {
    auto df = load(a.diagram, [&](const std::string& t) { return io::parse_diagram(v, t); });
    auto l = restriction_limit_of_diagram(v, df.diagram, r.opts);
    r.result["object"] = v.obj_name(l.obj);
    ojson legs = ojson::object(), doms = ojson::object();
    for (std::size_t i = 0; i < l.legs.size(); ++i) {
      legs[df.node_labels[i]] = v.name(l.legs[i]);
      doms[df.node_labels[i]] = v.name(l.domains[i]);
    }
    r.result["legs"] = legs;
    r.result["domains"] = doms;
    r.add("universal", l.universal);
  } else {
    need_products(in, a.file);
    MorId f = morphism(v, a.equalizer[0], "--equalizer"), g = morphism(v, a.equalizer[1], "--equalizer");
    if (v.dom(f) != v.dom(g) || v.cod(f) != v.cod(g))
      throw InputError("--equalizer: " + a.equalizer[0] + " and " + a.equalizer[1] + " are not parallel");
    auto e = total_equalizer(v, f, g, r.opts);
    r.result["object"] = v.obj_name(e.obj);
    r.result["inclusion"] = v.name(e.incl);
    r.add("universal", e.universal);
  }
}

struct LatticeArgs {
  std::string file, object;
};

void do_lattice(Run& r, const LatticeArgs& a) {
  Instance in = load_category(a.file);
  auto v = in.view();
  ObjId obj = object(v, a.object, "object");
  auto la = idempotent_lattice(v, obj, r.opts);
  r.add("lattice", la.laws);
  auto table = [&](const std::vector<std::vector<std::size_t>>& t) {
    ojson rows = ojson::array();
    for (auto& row : t) {
      ojson out = ojson::array();
      for (auto i : row) out.push_back(v.name(la.elems[i]));
      rows.push_back(out);
    }
    return rows;
  };
  r.result["object"] = a.object;
  r.result["elements"] = names(v, la.elems);
  r.result["bottom"] = v.name(la.elems[la.bottom]);
  r.result["top"] = v.name(la.elems[la.top]);
  r.result["meet"] = table(la.meet);
  r.result["join"] = table(la.join);
  // substitution along every f : X -> A
  LawReport sub;
  for (ObjId x : v.objects()) {
    if (v.hom(x, obj).empty()) continue;
    std::optional<IdempotentLattice<FinView>> got;
    try {
      got = idempotent_lattice(v, x, r.opts);
    } catch (const NoProducts&) {
      sub.note += (sub.note.empty() ? "skipped " : ", ") + v.obj_name(x);
      continue;
    }
    const auto& lx = *got;
    for (MorId f : v.hom(x, obj)) {
      ++sub.checked;
      auto s = check_substitution(v, f, lx, la);
      if (!s.meets && sub.fail(r.opts, "substitution-meet", {v.name(f)})) break;
      if (!s.joins && sub.fail(r.opts, "substitution-join", {v.name(f)})) break;
      if (!s.bottom && sub.fail(r.opts, "substitution-bottom", {v.name(f)})) break;
      if (s.top != is_total(v, f) && sub.fail(r.opts, "substitution-top", {v.name(f)})) break;
    }
    if (sub.stop(r.opts)) break;
  }
  if (!sub.note.empty()) sub.note += ": their lattices need products outside the table";
  r.add("substitution", sub);
}

struct ExtensiveArgs {
  std::string file, map;
};

void do_extensive(Run& r, const ExtensiveArgs& a) {
  Instance in = load_category(a.file);
  need_coproducts(in, a.file);
  auto v = in.view();
  if (!a.map.empty()) {
    MorId f = morphism(v, a.map, "--map");
    auto ver = is_extensive_map(v, f);
    LawReport rep;
    rep.checked = 1;
    if (!ver.determined) rep.note = "the domain's sum with itself is outside the table";
    if (!ver.extensive)
      rep.fail(r.opts, "not-extensive", {a.map, v.name(*ver.witness)}, "the decision " +
               v.name(*ver.witness) + " composed with the map has no decision");
    r.result["map"] = a.map;
    r.result["extensive"] = ver.extensive;
    r.result["determined"] = ver.determined;
    r.add("map", rep);
    return;
  }
  bool trivial = true;
  for (MorId f = 0; f < static_cast<MorId>(in.x.base().num_morphisms()); ++f)
    if (in.x.rst(f) != in.x.base().id(in.x.base().dom(f))) trivial = false;
  // total categories are checked as ordinary categories: pullbacks of
  // injections exist and form a coproduct
  r.result["mode"] = trivial ? "category" : "restriction";
  r.add("extensive", trivial ? check_extensive_category(v, r.opts) : is_extensive_rcat(v, r.opts));
}

struct ExampleArgs {
  std::string kind;
  int n = 2;
};

void do_example(Run& r, const ExampleArgs& a) {
  if (a.n < 0 || a.n > 4) throw InputError("--size must be between 0 and 4");
  if (a.kind == "finset") {
    auto d = finset_dist_table(a.n);
    r.emit("category", io::format_distributive(d), true);
    return;
  }
  Instance in;
  if (a.kind == "par") {
    in.x = par_to_rcat(a.n, r.cap(10000));
    in.cp = par_coproducts(in.x, a.n);
    in.rp = par_products(in.x, a.n);
    in.has_coproducts = in.has_products = true;
  } else if (a.kind == "trivial") {
    in = trivial_instance();
  } else if (a.kind == "counterexample") {
    in = truncated_counterexample().inst;
  } else if (a.kind == "f2vect") {
    in = f2vect_fragment();
  } else {
    throw InputError("example: unknown kind \"" + a.kind + "\"");
  }
  r.result["objects"] = in.x.base().num_objects();
  r.result["morphisms"] = count_morphisms(in.x);
  r.emit("category", io::format_category(in), true);
}

// ---- output -------------------------------------------------------------

std::string join_command(const std::vector<std::string>& cmd) {
  std::string s = "rcat";
  for (auto& a : cmd) s += " " + a;
  return s;
}

std::string scalar_text(const ojson& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print(const Run& r, double ms, std::ostream& out, std::ostream& err) {
  Status st = r.status();
  if (r.json) {
    ojson doc;
    doc["command"] = r.command;
    doc["status"] = to_string(st);
    ojson checks = ojson::array(), viols = ojson::array();
    for (auto& s : r.sections) {
      checks.push_back({{"name", s.name},
                        {"status", to_string(s.rep.status)},
                        {"checked", s.rep.checked},
                        {"sampled", s.rep.sampled},
                        {"note", s.rep.note}});
      for (auto& v : s.rep.violations)
        viols.push_back({{"check", s.name}, {"tag", v.tag}, {"witness", v.witness}, {"detail", v.detail}});
    }
    doc["checks"] = checks;
    doc["violations"] = viols;
    ojson result = r.result;
    if (r.artifact_text)
      result[r.artifact_key] = r.artifact_is_json ? ojson::parse(*r.artifact_text) : ojson(*r.artifact_text);
    doc["result"] = result;
    doc["artifact"] = r.artifact_path ? ojson(*r.artifact_path) : ojson(nullptr);
    if (r.timing) doc["timing_ms"] = std::round(ms * 1000.0) / 1000.0;
    out << doc.dump(2) << "\n";
    return;
  }
  // a construction without -o prints the artifact alone on stdout
  std::ostream& rep = r.artifact_text ? err : out;
  if (r.artifact_text) out << *r.artifact_text;
  rep << "command: " << join_command(r.command) << "\n";
  rep << "status: " << to_string(st) << "\n";
  for (auto& s : r.sections) {
    rep << "check " << s.name << ": " << to_string(s.rep.status) << " (" << s.rep.checked << " checked"
        << (s.rep.sampled ? ", sampled" : "") << ")";
    if (!s.rep.note.empty()) rep << " " << s.rep.note;
    rep << "\n";
    for (auto& v : s.rep.violations) {
      rep << "violation [" << s.name << "] " << v.tag << ":";
      for (auto& w : v.witness) rep << " " << w;
      if (!v.detail.empty()) rep << " (" << v.detail << ")";
      rep << "\n";
    }
  }
  for (auto& [k, val] : r.result.items()) rep << k << ": " << scalar_text(val) << "\n";
  if (r.artifact_path) rep << "artifact: " << *r.artifact_path << "\n";
  if (r.timing) rep << "time: " << std::fixed << std::setprecision(3) << ms << " ms\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Run r;
  r.command = args;

  CLI::App app{"rcat: finite restriction categories", "rcat"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", r.json, "emit the report as one JSON document");
  app.add_flag("--timing", r.timing, "include wall-clock time in the report");
  app.add_flag("--all", r.opts.all_violations, "collect every violation, not only the first");
  app.add_option("-o,--output", r.output, "write the constructed artifact to this file");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "restriction axioms and optional structure");
  check->add_option("file", ca.file, "category file")->required();
  check->add_flag("--coproducts", ca.coproducts, "check the chosen restriction coproducts");
  check->add_flag("--zero", ca.zero, "check for a restriction zero");
  check->add_flag("--products", ca.products, "check the chosen restriction products");
  check->add_option("--samples", ca.samples, "sample quantified laws instead of enumerating");

  DecideArgs da;
  auto* decide = app.add_subcommand("decide", "find the decision of a map into a coproduct");
  decide->add_option("file", da.file, "category file")->required();
  decide->add_option("--morphism", da.morphism, "map f : C -> A+B")->required();
  decide->add_option("--coproduct", da.coproduct, "summands, e.g. A+B")->required();

  MatrixArgs ma;
  auto* matrix = app.add_subcommand("matrix", "matrix calculus for maps between coproducts");
  matrix->add_option("op", ma.op, "decompose, recompose or multiply")
      ->required()
      ->check(CLI::IsMember({"decompose", "recompose", "multiply"}));
  matrix->add_option("file", ma.file, "category file")->required();
  matrix->add_option("--morphism", ma.morphism, "map to decompose");
  matrix->add_option("--rows", ma.rows, "domain summands, e.g. A+B");
  matrix->add_option("--cols", ma.cols, "codomain summands, e.g. C+D");
  matrix->add_option("--matrix", ma.matrix, "matrix text file to recompose");
  matrix->add_option("--left", ma.left, "matrix text file G");
  matrix->add_option("--right", ma.right, "matrix text file F; multiply computes G F");

  FileArgs sa, ta;
  auto* split = app.add_subcommand("split", "split the restriction idempotents");
  split->add_option("file", sa.file, "category file")->required();
  auto* total = app.add_subcommand("total", "the subcategory of total maps");
  total->add_option("file", ta.file, "category file")->required();

  CompleteArgs co;
  auto* complete = app.add_subcommand("complete", "extensive completion of a distributive category");
  complete->add_option("--finset", co.finset, "FinSet on sizes 0..N");
  complete->add_option("--file", co.file, "distributive category file");

  LimitsArgs la;
  auto* limits = app.add_subcommand("limits", "restriction limits");
  limits->add_option("file", la.file, "category file")->required();
  limits->add_option("--diagram", la.diagram, "diagram file");
  limits->add_option("--arrow", la.arrow, "limit of a single arrow");
  limits->add_option("--equalizer", la.equalizer, "equalizer of two total maps")->expected(2);

  LatticeArgs lta;
  auto* lattice = app.add_subcommand("lattice", "the lattice of restriction idempotents on an object");
  lattice->add_option("file", lta.file, "category file")->required();
  lattice->add_option("object", lta.object, "object name")->required();

  ExtensiveArgs ea;
  auto* extensive = app.add_subcommand("extensive", "extensivity of a category or a map");
  extensive->add_option("file", ea.file, "category file")->required();
  extensive->add_option("--map", ea.map, "check this map only");

  ExampleArgs xa;
  auto* example = app.add_subcommand("example", "emit a built-in instance");
  example->add_option("kind", xa.kind, "par, finset, trivial, counterexample or f2vect")->required();
  example->add_option("--size", xa.n, "size bound for par and finset");

  auto input_error = [&](const std::string& msg) {
    err << "rcat: error: " << msg << "\n";
    if (r.json) {
      ojson doc;
      doc["command"] = r.command;
      doc["status"] = "error";
      doc["error"] = msg;
      out << doc.dump(2) << "\n";
    }
    return 2;
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return input_error(e.what());
  }

  if (const char* env = std::getenv("RCAT_CAP")) {
    std::size_t used = 0;
    try {
      long long v = std::stoll(env, &used);
      if (used != std::string(env).size() || v <= 0) throw std::invalid_argument("");
      r.env_cap = static_cast<std::size_t>(v);
      r.opts.cap = *r.env_cap;
    } catch (const std::logic_error&) {
      return input_error(std::string("RCAT_CAP must be a positive integer, got \"") + env + "\"");
    }
  }

  auto t0 = std::chrono::steady_clock::now();
  try {
    try {
      if (*check) do_check(r, ca);
      else if (*decide) do_decide(r, da);
      else if (*matrix) do_matrix(r, ma);
      else if (*split) do_split(r, sa);
      else if (*total) do_total(r, ta);
      else if (*complete) do_complete(r, co);
      else if (*limits) do_limits(r, la);
      else if (*lattice) do_lattice(r, lta);
      else if (*extensive) do_extensive(r, ea);
      else if (*example) do_example(r, xa);
    } catch (const InputError&) {
      throw;
    } catch (const MalformedTable& e) {
      throw InputError(e.what());
    } catch (const InvalidDistributiveData& e) {
      throw InputError(e.what());
    } catch (const CapExceeded& e) {
      r.add("cap", truncated(e.what()));
    } catch (const Error& e) {
      LawReport rep;
      rep.fail(r.opts, error_tag(e), {}, e.what());
      r.add("error", rep);
    }
  } catch (const InputError& e) {
    return input_error(e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  print(r, ms, out, err);
  return r.status() == Status::Pass ? 0 : 1;
}

}  // namespace rcat::cli
