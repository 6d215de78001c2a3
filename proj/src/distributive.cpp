#include "rcat/distributive.hpp"

#include "rcat/coproducts.hpp"
#include "rcat/fin_view.hpp"
#include "rcat/products.hpp"

namespace rcat {

std::vector<PartialFn> all_total_fns(int a, int b) {
  std::vector<PartialFn> out;
  if (b == 0 && a > 0) return out;
  std::vector<int> t(a, 0);
  while (true) {
    out.emplace_back(a, b, t);
    int i = a - 1;
    while (i >= 0 && ++t[i] == b) t[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<int> FinSetCat::objects() const {
  std::vector<int> v(max_ + 1);
  for (int i = 0; i <= max_; ++i) v[i] = i;
  return v;
}

PartialFn FinSetCat::pair(const PartialFn& f, const PartialFn& g) const {
  if (f.src != g.src) throw ShapeMismatch("pair: different sources");
  std::vector<int> t(f.src);
  for (int x = 0; x < f.src; ++x) {
    if (!f.defined(x) || !g.defined(x)) throw ShapeMismatch("pair: partial component");
    t[x] = f(x) * g.tgt + g(x);
  }
  return {f.src, f.tgt * g.tgt, std::move(t)};
}

PartialFn FinSetCat::dist_inv(int a, int b, int c) const {
  std::vector<int> t(static_cast<std::size_t>(a) * (b + c));
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b + c; ++y) t[x * (b + c) + y] = y < b ? x * b + y : a * b + x * c + (y - b);
  return {a * (b + c), a * b + a * c, std::move(t)};
}

// ---- DistTable ------------------------------------------------------------

DistTable::DistTable(FinCategory c, std::map<std::pair<ObjId, ObjId>, Cocone> sums,
                     std::map<std::pair<ObjId, ObjId>, Cocone> prods, std::optional<ObjId> initial,
                     std::optional<ObjId> terminal,
                     std::map<std::tuple<ObjId, ObjId, ObjId>, MorId> dist_inv)
    : c_(std::move(c)),
      sums_(std::move(sums)),
      prods_(std::move(prods)),
      initial_(initial),
      terminal_(terminal),
      dinv_(std::move(dist_inv)) {
  for (ObjId a = 0; a < static_cast<ObjId>(c_.num_objects()); ++a) objs_.push_back(a);
}

const DistTable::Cocone& DistTable::need_sum(ObjId a, ObjId b) const {
  auto it = sums_.find({a, b});
  if (it == sums_.end())
    throw StructureError("no chosen coproduct " + obj_name(a) + "+" + obj_name(b));
  return it->second;
}

const DistTable::Cocone& DistTable::need_prod(ObjId a, ObjId b) const {
  auto it = prods_.find({a, b});
  if (it == prods_.end())
    throw StructureError("no chosen product " + obj_name(a) + "×" + obj_name(b));
  return it->second;
}

std::optional<ObjId> DistTable::sum(ObjId a, ObjId b) const {
  auto it = sums_.find({a, b});
  if (it == sums_.end()) return std::nullopt;
  return it->second.obj;
}
MorId DistTable::inl(ObjId a, ObjId b) const { return need_sum(a, b).i; }
MorId DistTable::inr(ObjId a, ObjId b) const { return need_sum(a, b).j; }

MorId DistTable::copair(MorId f, MorId g) const {
  const auto& s = need_sum(dom(f), dom(g));
  for (MorId h : c_.hom(s.obj, cod(f)))
    if (c_.compose(h, s.i) == f && c_.compose(h, s.j) == g) return h;
  throw StructureError("no copairing of " + name(f) + " and " + name(g));
}

MorId DistTable::from_initial(ObjId a) const {
  if (!initial_) throw StructureError("no chosen initial object");
  const auto& h = c_.hom(*initial_, a);
  if (h.size() != 1) throw StructureError("initial object has " + std::to_string(h.size()) + " maps");
  return h.front();
}

std::optional<ObjId> DistTable::prod(ObjId a, ObjId b) const {
  auto it = prods_.find({a, b});
  if (it == prods_.end()) return std::nullopt;
  return it->second.obj;
}
MorId DistTable::proj1(ObjId a, ObjId b) const { return need_prod(a, b).i; }
MorId DistTable::proj2(ObjId a, ObjId b) const { return need_prod(a, b).j; }

MorId DistTable::pair(MorId f, MorId g) const {
  const auto& p = need_prod(cod(f), cod(g));
  for (MorId h : c_.hom(dom(f), p.obj))
    if (c_.compose(p.i, h) == f && c_.compose(p.j, h) == g) return h;
  throw StructureError("no pairing of " + name(f) + " and " + name(g));
}

MorId DistTable::tensor(MorId f, MorId g) const {
  return pair(c_.compose(f, proj1(dom(f), dom(g))), c_.compose(g, proj2(dom(f), dom(g))));
}

MorId DistTable::to_terminal(ObjId a) const {
  if (!terminal_) throw StructureError("no chosen terminal object");
  const auto& h = c_.hom(a, *terminal_);
  if (h.size() != 1) throw StructureError("terminal object has " + std::to_string(h.size()) + " maps");
  return h.front();
}

MorId DistTable::dist_inv(ObjId a, ObjId b, ObjId c) const {
  auto it = dinv_.find({a, b, c});
  if (it == dinv_.end())
    throw StructureError("no δ⁻¹ for " + obj_name(a) + "×(" + obj_name(b) + "+" + obj_name(c) + ")");
  return it->second;
}

void DistTable::validate() const {
  FinView v(c_);
  auto bad = [](const std::string& what) { throw InvalidDistributiveData(what); };
  for (auto& [ab, s] : sums_) {
    if (c_.dom(s.i) != ab.first || c_.dom(s.j) != ab.second || c_.cod(s.i) != s.obj ||
        c_.cod(s.j) != s.obj)
      bad("coproduct " + obj_name(ab.first) + "+" + obj_name(ab.second) + ": injections mistyped");
    if (!is_coproduct_cocone(v, s.i, s.j))
      bad("coproduct " + obj_name(ab.first) + "+" + obj_name(ab.second) + " is not universal");
  }
  for (auto& [ab, p] : prods_) {
    if (c_.cod(p.i) != ab.first || c_.cod(p.j) != ab.second || c_.dom(p.i) != p.obj ||
        c_.dom(p.j) != p.obj)
      bad("product " + obj_name(ab.first) + "×" + obj_name(ab.second) + ": projections mistyped");
    if (!is_ordinary_product(v, p.i, p.j))
      bad("product " + obj_name(ab.first) + "×" + obj_name(ab.second) + " is not universal");
  }
  if (initial_ && !is_initial_in_scope(v, *initial_)) bad("initial object is not initial");
  if (terminal_ && !is_terminal_in_scope(v, *terminal_)) bad("terminal object is not terminal");
  for (ObjId a : objs_)
    for (ObjId b : objs_)
      for (ObjId c : objs_) {
        auto bc = sum(b, c);
        if (!bc || !prod(a, b) || !prod(a, c) || !prod(a, *bc) || !sum(*prod(a, b), *prod(a, c)))
          continue;
        std::string t = obj_name(a) + "×(" + obj_name(b) + "+" + obj_name(c) + ")";
        auto it = dinv_.find({a, b, c});
        if (it == dinv_.end()) bad("missing δ⁻¹ for " + t);
        MorId d = canonical_delta(*this, a, b, c), m = it->second;
        if (c_.dom(m) != c_.cod(d) || c_.cod(m) != c_.dom(d)) bad("δ⁻¹ for " + t + " mistyped");
        if (c_.compose(m, d) != c_.id(c_.dom(d)) || c_.compose(d, m) != c_.id(c_.cod(d)))
          bad("δ⁻¹ for " + t + " does not invert δ");
      }
  for (auto& [k, m] : dinv_) {
    auto [a, b, c] = k;
    auto bc = sum(b, c);
    if (!bc || !prod(a, b) || !prod(a, c) || !prod(a, *bc) || !sum(*prod(a, b), *prod(a, c)))
      bad("δ⁻¹ entry for " + obj_name(a) + "," + obj_name(b) + "," + obj_name(c) +
          " without the objects it needs");
    (void)m;
  }
}

DistTable finset_dist_table(int n) {
  FinSetCat fs(n);
  CategoryData d;
  std::vector<PartialFn> fns;
  std::map<PartialFn, MorId> index;
  for (int a = 0; a <= n; ++a) d.objects.push_back(std::to_string(a));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (auto& f : fs.hom(a, b)) {
        index.emplace(f, static_cast<MorId>(fns.size()));
        d.morphisms.push_back({f.name(), a, b});
        fns.push_back(f);
      }
  for (int a = 0; a <= n; ++a) d.identity.push_back(index.at(PartialFn::identity(a)));
  FinCategory c(std::move(d), [&](MorId g, MorId f) { return index.at(par_compose(fns[g], fns[f])); });
  std::map<std::pair<ObjId, ObjId>, DistTable::Cocone> sums, prods;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      if (a + b <= n) sums[{a, b}] = {a + b, index.at(par_inl(a, b)), index.at(par_inr(a, b))};
      if (a * b <= n) prods[{a, b}] = {a * b, index.at(par_proj1(a, b)), index.at(par_proj2(a, b))};
    }
  std::map<std::tuple<ObjId, ObjId, ObjId>, MorId> dinv;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int cc = 0; cc <= n; ++cc)
        if (b + cc <= n && a * (b + cc) <= n) dinv[{a, b, cc}] = index.at(fs.dist_inv(a, b, cc));
  std::optional<ObjId> terminal;
  if (n >= 1) terminal = 1;
  return DistTable(std::move(c), std::move(sums), std::move(prods), 0, terminal, std::move(dinv));
}

}  // namespace rcat
