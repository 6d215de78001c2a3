#include "rcat/io.hpp"

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace rcat::io {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw MalformedTable(where + ": " + what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // drop the "[json.exception.parse_error.N] " prefix; the rest has line and column
    std::string msg = e.what();
    auto p = msg.find("] ");
    throw MalformedTable(p == std::string::npos ? msg : msg.substr(p + 2));
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

std::string q(const std::string& s) { return json(s).dump(); }

// name lookups with positional errors
struct Names {
  std::map<std::string, ObjId> objs;
  std::map<std::string, MorId> mors;

  ObjId obj(const json& j, const std::string& where) const {
    auto s = str(j, where);
    auto it = objs.find(s);
    if (it == objs.end()) bad(where, "unknown object " + q(s));
    return it->second;
  }
  MorId mor(const json& j, const std::string& where) const {
    auto s = str(j, where);
    auto it = mors.find(s);
    if (it == mors.end()) bad(where, "unknown morphism " + q(s));
    return it->second;
  }
};

struct Loaded {
  FinCategory cat;
  Names names;
  std::optional<std::vector<MorId>> restriction;
};

Loaded load_table(const json& doc) {
  if (!doc.is_object()) bad("document", "expected an object");
  static const std::set<std::string> known = {"objects",    "morphisms", "identity", "compose",
                                              "restriction", "coproducts", "initial", "products",
                                              "terminal",   "dist_inv"};
  for (auto& [k, v] : doc.items())
    if (!known.count(k)) bad(k, "unknown field");
  Loaded out;
  CategoryData d;
  const auto& objs = array(field(doc, "objects", "document"), "objects");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    auto s = str(objs[i], at("objects", i));
    if (!out.names.objs.emplace(s, static_cast<ObjId>(i)).second)
      bad(at("objects", i), "duplicate object " + q(s));
    d.objects.push_back(s);
  }
  const auto& mors = array(field(doc, "morphisms", "document"), "morphisms");
  for (std::size_t i = 0; i < mors.size(); ++i) {
    std::string w = at("morphisms", i);
    auto name = str(field(mors[i], "name", w), w + ".name");
    if (!out.names.mors.emplace(name, static_cast<MorId>(i)).second)
      bad(w + ".name", "duplicate morphism " + q(name));
    ObjId a = out.names.obj(field(mors[i], "dom", w), w + ".dom");
    ObjId b = out.names.obj(field(mors[i], "cod", w), w + ".cod");
    d.morphisms.push_back({name, a, b});
  }
  const auto& ids = field(doc, "identity", "document");
  if (!ids.is_object()) bad("identity", "expected an object");
  d.identity.assign(d.objects.size(), kNoMor);
  for (auto& [k, v] : ids.items()) {
    std::string w = "identity." + k;
    auto it = out.names.objs.find(k);
    if (it == out.names.objs.end()) bad(w, "unknown object " + q(k));
    MorId m = out.names.mor(v, w);
    if (d.morphisms[m].dom != it->second || d.morphisms[m].cod != it->second)
      bad(w, q(d.morphisms[m].name) + " is not an endomorphism of " + q(k));
    d.identity[it->second] = m;
  }
  for (std::size_t a = 0; a < d.objects.size(); ++a)
    if (d.identity[a] == kNoMor) bad("identity", "missing entry for " + q(d.objects[a]));
  const auto& comp = array(field(doc, "compose", "document"), "compose");
  std::vector<std::array<MorId, 3>> triples;
  for (std::size_t t = 0; t < comp.size(); ++t) {
    std::string w = at("compose", t);
    if (!comp[t].is_array() || comp[t].size() != 3) bad(w, "expected [g, f, gf]");
    triples.push_back({out.names.mor(comp[t][0], w + "[0]"), out.names.mor(comp[t][1], w + "[1]"),
                       out.names.mor(comp[t][2], w + "[2]")});
  }
  out.cat = FinCategory(d, triples);
  if (auto it = doc.find("restriction"); it != doc.end()) {
    if (!it->is_object()) bad("restriction", "expected an object");
    std::vector<MorId> r(d.morphisms.size(), kNoMor);
    for (auto& [k, v] : it->items()) {
      std::string w = "restriction." + k;
      auto f = out.names.mors.find(k);
      if (f == out.names.mors.end()) bad(w, "unknown morphism " + q(k));
      MorId e = out.names.mor(v, w);
      ObjId a = d.morphisms[f->second].dom;
      if (d.morphisms[e].dom != a || d.morphisms[e].cod != a)
        bad(w, q(d.morphisms[e].name) + " is not an endomorphism of " + q(d.objects[a]));
      r[f->second] = e;
    }
    for (std::size_t f = 0; f < r.size(); ++f)
      if (r[f] == kNoMor) bad("restriction", "missing entry for " + q(d.morphisms[f].name));
    out.restriction = std::move(r);
  }
  return out;
}

struct Cone {
  ObjId left, right, apex;
  MorId i, j;
};

// coproducts (i, j into the sum) or products (p, q out of the product)
std::vector<Cone> load_cones(const json& doc, const char* key, const Names& n,
                             const FinCategory& c, bool co) {
  std::vector<Cone> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  const auto& arr = array(*it, key);
  const char* apex = co ? "sum" : "product";
  const char* mi = co ? "inl" : "p";
  const char* mj = co ? "inr" : "q";
  std::set<std::pair<ObjId, ObjId>> seen;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    std::string w = at(key, k);
    Cone cn{n.obj(field(arr[k], "left", w), w + ".left"),
            n.obj(field(arr[k], "right", w), w + ".right"),
            n.obj(field(arr[k], apex, w), w + "." + apex),
            n.mor(field(arr[k], mi, w), w + "." + mi), n.mor(field(arr[k], mj, w), w + "." + mj)};
    if (!seen.insert({cn.left, cn.right}).second) bad(w, "duplicate entry for this pair");
    auto typed = [&](MorId m, ObjId side) {
      return co ? c.dom(m) == side && c.cod(m) == cn.apex : c.dom(m) == cn.apex && c.cod(m) == side;
    };
    if (!typed(cn.i, cn.left)) bad(w + "." + mi, q(c.name(cn.i)) + " has the wrong type");
    if (!typed(cn.j, cn.right)) bad(w + "." + mj, q(c.name(cn.j)) + " has the wrong type");
    out.push_back(cn);
  }
  return out;
}

std::optional<ObjId> load_obj(const json& doc, const char* key, const Names& n) {
  auto it = doc.find(key);
  if (it == doc.end()) return std::nullopt;
  return n.obj(*it, key);
}

// sections of the output document, emitted in order
class Writer {
 public:
  void scalar(const std::string& key, const std::string& value) { sec_.push_back(q(key) + ": " + value); }
  void lines(const std::string& key, char open, const std::vector<std::string>& items) {
    std::string s = q(key) + ": ";
    s += open;
    if (items.empty()) {
      s += open == '[' ? ']' : '}';
    } else {
      s += '\n';
      for (std::size_t i = 0; i < items.size(); ++i)
        s += "    " + items[i] + (i + 1 < items.size() ? ",\n" : "\n");
      s += "  ";
      s += open == '[' ? ']' : '}';
    }
    sec_.push_back(std::move(s));
  }
  std::string str() const {
    std::string s = "{\n";
    for (std::size_t i = 0; i < sec_.size(); ++i)
      s += "  " + sec_[i] + (i + 1 < sec_.size() ? ",\n" : "\n");
    return s + "}\n";
  }

 private:
  std::vector<std::string> sec_;
};

void write_table(Writer& w, const FinRCat& x) {
  const auto& c = x.base();
  std::vector<std::string> objs, mors, ids, comp, rst;
  for (auto& o : c.object_names()) objs.push_back(q(o));
  for (auto& m : c.morphism_specs())
    mors.push_back("{\"name\": " + q(m.name) + ", \"dom\": " + q(c.obj_name(m.dom)) +
                   ", \"cod\": " + q(c.obj_name(m.cod)) + "}");
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a)
    ids.push_back(q(c.obj_name(a)) + ": " + q(c.name(c.id(a))));
  for (ObjId b = 0; b < static_cast<ObjId>(c.num_objects()); ++b)
    for (MorId g : c.out(b))
      for (MorId f : c.in(b))
        comp.push_back("[" + q(c.name(g)) + ", " + q(c.name(f)) + ", " +
                       q(c.name(c.compose_unchecked(g, f))) + "]");
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f)
    rst.push_back(q(c.name(f)) + ": " + q(c.name(x.rst(f))));
  w.lines("objects", '[', objs);
  w.lines("morphisms", '[', mors);
  w.lines("identity", '{', ids);
  w.lines("compose", '[', comp);
  w.lines("restriction", '{', rst);
}

std::string cone_line(const FinCategory& c, ObjId l, ObjId r, ObjId apex, MorId i, MorId j, bool co) {
  return "{\"left\": " + q(c.obj_name(l)) + ", \"right\": " + q(c.obj_name(r)) + ", " +
         q(co ? "sum" : "product") + ": " + q(c.obj_name(apex)) + ", " + q(co ? "inl" : "p") +
         ": " + q(c.name(i)) + ", " + q(co ? "inr" : "q") + ": " + q(c.name(j)) + "}";
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedTable(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedTable(path + ": cannot write file");
  out << text;
}

Instance parse_category(const std::string& text) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("dist_inv")) bad("dist_inv", "not allowed in a category file");
  Loaded l = load_table(doc);
  Instance inst;
  const auto& c = l.cat;
  inst.x = l.restriction ? FinRCat(l.cat, *l.restriction) : FinRCat::trivial(l.cat);
  auto sums = load_cones(doc, "coproducts", l.names, c, true);
  auto initial = load_obj(doc, "initial", l.names);
  if (!sums.empty() || initial) {
    std::map<std::pair<ObjId, ObjId>, CoproductStructure::Sum> m;
    for (auto& s : sums) m[{s.left, s.right}] = {s.apex, s.i, s.j};
    inst.cp = CoproductStructure(inst.x.base(), std::move(m), initial);
    inst.has_coproducts = true;
  }
  auto prods = load_cones(doc, "products", l.names, c, false);
  auto terminal = load_obj(doc, "terminal", l.names);
  if (!prods.empty() || terminal) {
    std::map<std::pair<ObjId, ObjId>, ProductStructure::Prod> m;
    for (auto& p : prods) m[{p.left, p.right}] = {p.apex, p.i, p.j};
    inst.rp = ProductStructure::from_projections(inst.x, std::move(m), terminal);
    inst.has_products = true;
  }
  return inst;
}

std::string format_category(const FinRCat& x, const CoproductStructure* cp,
                            const ProductStructure* rp) {
  Writer w;
  write_table(w, x);
  const auto& c = x.base();
  if (cp) {
    std::vector<std::string> items;
    for (auto& [ab, s] : cp->sums())
      items.push_back(cone_line(c, ab.first, ab.second, s.sum, s.inl, s.inr, true));
    w.lines("coproducts", '[', items);
    if (cp->initial()) w.scalar("initial", q(c.obj_name(*cp->initial())));
  }
  if (rp) {
    std::vector<std::string> items;
    for (auto& [ab, p] : rp->prods)
      items.push_back(cone_line(c, ab.first, ab.second, p.prod, p.p, p.q, false));
    w.lines("products", '[', items);
    if (rp->terminal) w.scalar("terminal", q(c.obj_name(*rp->terminal)));
  }
  return w.str();
}

DistTable parse_distributive(const std::string& text) {
  json doc = parse_json(text);
  Loaded l = load_table(doc);
  const auto& c = l.cat;
  if (l.restriction)
    for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f)
      if ((*l.restriction)[f] != c.id(c.dom(f)))
        bad("restriction." + c.name(f), "distributive data must have the trivial restriction");
  std::map<std::pair<ObjId, ObjId>, DistTable::Cocone> sums, prods;
  for (auto& s : load_cones(doc, "coproducts", l.names, c, true))
    sums[{s.left, s.right}] = {s.apex, s.i, s.j};
  for (auto& p : load_cones(doc, "products", l.names, c, false))
    prods[{p.left, p.right}] = {p.apex, p.i, p.j};
  std::map<std::tuple<ObjId, ObjId, ObjId>, MorId> dinv;
  if (auto it = doc.find("dist_inv"); it != doc.end()) {
    const auto& arr = array(*it, "dist_inv");
    for (std::size_t k = 0; k < arr.size(); ++k) {
      std::string w = at("dist_inv", k);
      ObjId a = l.names.obj(field(arr[k], "a", w), w + ".a");
      ObjId b = l.names.obj(field(arr[k], "b", w), w + ".b");
      ObjId cc = l.names.obj(field(arr[k], "c", w), w + ".c");
      MorId m = l.names.mor(field(arr[k], "map", w), w + ".map");
      if (!dinv.emplace(std::tuple{a, b, cc}, m).second) bad(w, "duplicate entry for this triple");
    }
  }
  DistTable d(l.cat, std::move(sums), std::move(prods), load_obj(doc, "initial", l.names),
              load_obj(doc, "terminal", l.names), std::move(dinv));
  d.validate();
  return d;
}

std::string format_distributive(const DistTable& d) {
  Writer w;
  const auto& c = d.cat();
  write_table(w, FinRCat::trivial(c));
  std::vector<std::string> sums, prods, dinv;
  for (auto& [ab, s] : d.sums()) sums.push_back(cone_line(c, ab.first, ab.second, s.obj, s.i, s.j, true));
  for (auto& [ab, p] : d.prods())
    prods.push_back(cone_line(c, ab.first, ab.second, p.obj, p.i, p.j, false));
  for (auto& [k, m] : d.dist_inv_table()) {
    auto [a, b, cc] = k;
    dinv.push_back("{\"a\": " + q(c.obj_name(a)) + ", \"b\": " + q(c.obj_name(b)) +
                   ", \"c\": " + q(c.obj_name(cc)) + ", \"map\": " + q(c.name(m)) + "}");
  }
  w.lines("coproducts", '[', sums);
  if (d.initial()) w.scalar("initial", q(c.obj_name(*d.initial())));
  w.lines("products", '[', prods);
  if (d.terminal()) w.scalar("terminal", q(c.obj_name(*d.terminal())));
  w.lines("dist_inv", '[', dinv);
  return w.str();
}

std::vector<ObjId> parse_object_sum(const FinCategory& c, const std::string& text,
                                    const std::string& where) {
  std::vector<ObjId> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto p = text.find('+', start);
    std::string name = text.substr(start, p == std::string::npos ? std::string::npos : p - start);
    try {
      out.push_back(c.find_object(name));
    } catch (const UnknownObject&) {
      bad(where, "unknown object " + q(name));
    }
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

PartialMatrix<FinView> parse_matrix(const FinView& v, const std::string& text) {
  struct Tok {
    std::string s;
    std::size_t line;
  };
  std::vector<Tok> toks;
  std::istringstream in(text);
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) toks.push_back({t, n});
  }
  auto pos = [](const Tok& t) { return "line " + std::to_string(t.line); };
  if (toks.size() < 2 || toks[0].s.rfind("rows=", 0) != 0 || toks[1].s.rfind("cols=", 0) != 0)
    bad("line 1", "expected header 'rows=... cols=...'");
  const auto& c = v.cat();
  PartialMatrix<FinView> m;
  m.rows = parse_object_sum(c, toks[0].s.substr(5), "line 1 rows");
  m.cols = parse_object_sum(c, toks[1].s.substr(5), "line 1 cols");
  std::size_t k = 2;
  auto mor = [&](const Tok& t) {
    try {
      return c.find_morphism(t.s);
    } catch (const UnknownMorphism&) {
      bad(pos(t), "unknown morphism " + q(t.s));
    }
  };
  for (std::size_t l = 0; l < m.rows.size(); ++l) {
    std::vector<MorId> row;
    for (std::size_t j = 0; j < m.cols.size(); ++j, ++k) {
      if (k >= toks.size() || toks[k].s == "witness")
        bad(k < toks.size() ? pos(toks[k]) : "end of input",
            "expected " + std::to_string(m.rows.size() * m.cols.size()) + " entries");
      MorId e = mor(toks[k]);
      if (v.dom(e) != m.rows[l] || v.cod(e) != m.cols[j])
        bad(pos(toks[k]), q(toks[k].s) + " is not a map " + q(c.obj_name(m.rows[l])) + " -> " +
                              q(c.obj_name(m.cols[j])));
      row.push_back(e);
    }
    m.entries.push_back(std::move(row));
  }
  if (k < toks.size()) {
    if (toks[k].s != "witness") bad(pos(toks[k]), "expected 'witness' or end of input");
    ++k;
    for (std::size_t l = 0; l < m.rows.size(); ++l, ++k) {
      if (k >= toks.size()) bad("end of input", "expected " + std::to_string(m.rows.size()) + " witnesses");
      MorId h = mor(toks[k]);
      if (v.dom(h) != m.rows[l]) bad(pos(toks[k]), q(toks[k].s) + " has the wrong domain");
      m.witness.push_back(h);
    }
    if (k < toks.size()) bad(pos(toks[k]), "trailing input");
  } else {
    for (std::size_t l = 0; l < m.rows.size(); ++l) {
      auto h = detail::row_witness(v, m.rows[l], m.entries[l]);
      if (!h) throw InvalidWitness("row " + std::to_string(l) + " has no witness: its entries overlap");
      m.witness.push_back(*h);
    }
  }
  return m;
}

std::string format_matrix(const FinView& v, const PartialMatrix<FinView>& m) {
  auto sum = [&](const std::vector<ObjId>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "+" : "") + v.obj_name(xs[i]);
    return s;
  };
  std::string out = "rows=" + sum(m.rows) + " cols=" + sum(m.cols) + "\n";
  for (auto& row : m.entries) {
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + v.name(row[j]);
    out += "\n";
  }
  out += "witness";
  for (auto h : m.witness) out += " " + v.name(h);
  return out + "\n";
}

DiagramFile parse_diagram(const FinView& v, const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) bad("document", "expected an object");
  DiagramFile out;
  const auto& c = v.cat();
  const auto& assign = field(doc, "assignment", "document");
  if (!assign.is_object()) bad("assignment", "expected an object");
  std::map<std::string, std::size_t> node_index;
  std::set<std::string> labels;
  const auto& nodes = array(field(doc, "nodes", "document"), "nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto s = str(nodes[i], at("nodes", i));
    if (!labels.insert(s).second) bad(at("nodes", i), "duplicate label " + q(s));
    node_index[s] = i;
    out.node_labels.push_back(s);
    std::string w = "assignment." + s;
    auto name = str(field(assign, s.c_str(), "assignment"), w);
    try {
      out.diagram.nodes.push_back(c.find_object(name));
    } catch (const UnknownObject&) {
      bad(w, "unknown object " + q(name));
    }
  }
  const auto& arrows = array(field(doc, "arrows", "document"), "arrows");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string w = at("arrows", i);
    auto s = str(field(arrows[i], "name", w), w + ".name");
    if (!labels.insert(s).second) bad(w + ".name", "duplicate label " + q(s));
    auto node = [&](const char* key) {
      auto l = str(field(arrows[i], key, w), w + "." + key);
      auto it = node_index.find(l);
      if (it == node_index.end()) bad(w + "." + key, "unknown node " + q(l));
      return it->second;
    };
    std::size_t from = node("from"), to = node("to");
    std::string aw = "assignment." + s;
    auto name = str(field(assign, s.c_str(), "assignment"), aw);
    MorId f;
    try {
      f = c.find_morphism(name);
    } catch (const UnknownMorphism&) {
      bad(aw, "unknown morphism " + q(name));
    }
    if (v.dom(f) != out.diagram.nodes[from] || v.cod(f) != out.diagram.nodes[to])
      bad(aw, q(name) + " does not match the arrow's endpoints");
    out.arrow_labels.push_back(s);
    out.diagram.arrows.push_back({from, to, f});
  }
  for (auto& [k, val] : assign.items())
    if (!labels.count(k)) bad("assignment." + k, "no node or arrow with this label");
  return out;
}

}  // namespace rcat::io
