#pragma once

// Constructions computed on demand over any restriction category: K_r(X),
// Total(X), and materialize() turning such a view into dense tables.

#include <compare>
#include <map>

#include "rcat/fin_view.hpp"
#include "rcat/restriction.hpp"

namespace rcat {

// "(A|e)" with ( ) | \ escaped by a backslash so names can be split again
std::string escape_name(const std::string& s);
std::string split_object_name(const std::string& a, const std::string& e);
// f : (A|e) -> (B|e') is named "f@(A|e)>(B|e')"
std::string split_morphism_name(const std::string& f, const std::string& dom,
                                const std::string& cod);

template <RestrictionCategory X>
struct SplitObject {
  ObjOf<X> obj;
  MorOf<X> e;
  auto operator<=>(const SplitObject&) const = default;
  bool operator==(const SplitObject&) const = default;
};

template <RestrictionCategory X>
struct SplitMor {
  MorOf<X> f;
  SplitObject<X> dom, cod;
  auto operator<=>(const SplitMor&) const = default;
  bool operator==(const SplitMor&) const = default;
};

// K_r(X): objects (A, e) with e a restriction idempotent; maps f with
// f·e = f and e'·f = f; the identity of (A, e) is e
template <RestrictionCategory X>
class KrView {
 public:
  using Obj = SplitObject<X>;
  using Mor = SplitMor<X>;

  explicit KrView(const X&&) = delete;  // keeps a pointer to x
  explicit KrView(const X& x) : x_(&x) {
    for (auto&& a : x.objects())
      for (auto&& e : restriction_idempotents(x, a)) objs_.push_back(Obj{a, e});
  }
  const X& base() const { return *x_; }

  const std::vector<Obj>& objects() const { return objs_; }
  std::vector<Mor> hom(const Obj& a, const Obj& b) const {
    std::vector<Mor> out;
    for (auto&& f : x_->hom(a.obj, b.obj))
      if (x_->compose(f, a.e) == f && x_->compose(b.e, f) == f) out.push_back(Mor{f, a, b});
    return out;
  }
  Obj dom(const Mor& f) const { return f.dom; }
  Obj cod(const Mor& f) const { return f.cod; }
  Mor id(const Obj& a) const { return Mor{a.e, a, a}; }
  Mor compose(const Mor& g, const Mor& f) const {
    if (!(g.dom == f.cod)) throw ShapeMismatch("K_r compose: " + name(g) + " . " + name(f));
    return Mor{x_->compose(g.f, f.f), f.dom, g.cod};
  }
  Mor rst(const Mor& f) const { return Mor{x_->rst(f.f), f.dom, f.dom}; }
  std::string obj_name(const Obj& a) const {
    return split_object_name(x_->obj_name(a.obj), x_->name(a.e));
  }
  std::string name(const Mor& f) const {
    return split_morphism_name(x_->name(f.f), obj_name(f.dom), obj_name(f.cod));
  }
  // a restriction idempotent d on (A, e) splits through (A, d)
  std::optional<Splitting<Obj, Mor>> split(const Mor& d) const {
    if (!(d.dom == d.cod) || !(rst(d) == d)) return std::nullopt;
    Obj s{d.dom.obj, d.f};
    return Splitting<Obj, Mor>{s, Mor{d.f, s, d.dom}, Mor{d.f, d.dom, s}};
  }

  // (A, e) + (B, e') = (A+B, e+e')
  std::optional<Obj> sum(const Obj& a, const Obj& b) const
    requires HasCoproducts<X>
  {
    auto s = x_->sum(a.obj, b.obj);
    if (!s) return std::nullopt;
    auto ee = x_->copair(x_->compose(x_->inl(a.obj, b.obj), a.e),
                         x_->compose(x_->inr(a.obj, b.obj), b.e));
    return Obj{*s, ee};
  }
  Mor inl(const Obj& a, const Obj& b) const
    requires HasCoproducts<X>
  {
    return Mor{x_->compose(x_->inl(a.obj, b.obj), a.e), a, *sum(a, b)};
  }
  Mor inr(const Obj& a, const Obj& b) const
    requires HasCoproducts<X>
  {
    return Mor{x_->compose(x_->inr(a.obj, b.obj), b.e), b, *sum(a, b)};
  }
  Mor copair(const Mor& f, const Mor& g) const
    requires HasCoproducts<X>
  {
    auto s = sum(f.dom, g.dom);
    if (!s) throw StructureError("K_r copair: no sum");
    return Mor{x_->copair(f.f, g.f), *s, f.cod};
  }
  std::optional<Obj> initial() const
    requires HasCoproducts<X>
  {
    auto z = x_->initial();
    if (!z) return std::nullopt;
    return Obj{*z, x_->id(*z)};
  }
  Mor from_initial(const Obj& a) const
    requires HasCoproducts<X>
  {
    return Mor{x_->from_initial(a.obj), *initial(), a};
  }

  // (A, e) × (B, e') = (A×B, e×e')
  std::optional<Obj> prod(const Obj& a, const Obj& b) const
    requires HasRestrictionProducts<X>
  {
    auto p = x_->prod(a.obj, b.obj);
    if (!p) return std::nullopt;
    return Obj{*p, x_->tensor(a.e, b.e)};
  }
  Mor proj1(const Obj& a, const Obj& b) const
    requires HasRestrictionProducts<X>
  {
    auto p = *prod(a, b);
    return Mor{x_->compose(x_->proj1(a.obj, b.obj), p.e), p, a};
  }
  Mor proj2(const Obj& a, const Obj& b) const
    requires HasRestrictionProducts<X>
  {
    auto p = *prod(a, b);
    return Mor{x_->compose(x_->proj2(a.obj, b.obj), p.e), p, b};
  }
  Mor diag(const Obj& a) const
    requires HasRestrictionProducts<X>
  {
    return Mor{x_->compose(x_->diag(a.obj), a.e), a, *prod(a, a)};
  }
  Mor tensor(const Mor& f, const Mor& g) const
    requires HasRestrictionProducts<X>
  {
    return Mor{x_->tensor(f.f, g.f), *prod(f.dom, g.dom), *prod(f.cod, g.cod)};
  }
  std::optional<Obj> terminal() const
    requires HasRestrictionProducts<X>
  {
    auto t = x_->terminal();
    if (!t) return std::nullopt;
    return Obj{*t, x_->id(*t)};
  }
  Mor to_terminal(const Obj& a) const
    requires HasRestrictionProducts<X>
  {
    return Mor{x_->compose(x_->to_terminal(a.obj), a.e), a, *terminal()};
  }

 private:
  const X* x_;
  std::vector<Obj> objs_;
};

// Total(X): the total maps, with trivial restriction
template <RestrictionCategory X>
class TotalView {
 public:
  using Obj = ObjOf<X>;
  using Mor = MorOf<X>;

  explicit TotalView(const X&&) = delete;  // keeps a pointer to x
  explicit TotalView(const X& x) : x_(&x) {}
  const X& base() const { return *x_; }

  decltype(auto) objects() const { return x_->objects(); }
  std::vector<Mor> hom(const Obj& a, const Obj& b) const {
    std::vector<Mor> out;
    for (auto&& f : x_->hom(a, b))
      if (is_total(*x_, f)) out.push_back(f);
    return out;
  }
  Obj dom(const Mor& f) const { return x_->dom(f); }
  Obj cod(const Mor& f) const { return x_->cod(f); }
  Mor id(const Obj& a) const { return x_->id(a); }
  Mor compose(const Mor& g, const Mor& f) const { return x_->compose(g, f); }
  Mor rst(const Mor& f) const { return x_->id(x_->dom(f)); }
  std::string name(const Mor& f) const { return x_->name(f); }
  std::string obj_name(const Obj& a) const { return x_->obj_name(a); }

  std::optional<Obj> sum(const Obj& a, const Obj& b) const
    requires HasCoproducts<X>
  {
    return x_->sum(a, b);
  }
  Mor inl(const Obj& a, const Obj& b) const
    requires HasCoproducts<X>
  {
    return x_->inl(a, b);
  }
  Mor inr(const Obj& a, const Obj& b) const
    requires HasCoproducts<X>
  {
    return x_->inr(a, b);
  }
  Mor copair(const Mor& f, const Mor& g) const
    requires HasCoproducts<X>
  {
    return x_->copair(f, g);
  }
  std::optional<Obj> initial() const
    requires HasCoproducts<X>
  {
    return x_->initial();
  }
  Mor from_initial(const Obj& a) const
    requires HasCoproducts<X>
  {
    return x_->from_initial(a);
  }

  std::optional<Obj> prod(const Obj& a, const Obj& b) const
    requires HasRestrictionProducts<X>
  {
    return x_->prod(a, b);
  }
  Mor proj1(const Obj& a, const Obj& b) const
    requires HasRestrictionProducts<X>
  {
    return x_->proj1(a, b);
  }
  Mor proj2(const Obj& a, const Obj& b) const
    requires HasRestrictionProducts<X>
  {
    return x_->proj2(a, b);
  }
  Mor diag(const Obj& a) const
    requires HasRestrictionProducts<X>
  {
    return x_->diag(a);
  }
  Mor tensor(const Mor& f, const Mor& g) const
    requires HasRestrictionProducts<X>
  {
    return x_->tensor(f, g);
  }
  std::optional<Obj> terminal() const
    requires HasRestrictionProducts<X>
  {
    return x_->terminal();
  }
  Mor to_terminal(const Obj& a) const
    requires HasRestrictionProducts<X>
  {
    return x_->to_terminal(a);
  }

 private:
  const X* x_;
};

// Dense tables for a view whose scope is closed under composition, together
// with whatever chosen coproducts and restriction products land in the scope.
template <RestrictionCategory C>
struct Materialized {
  FinRCat rcat;
  CoproductStructure cp;
  ProductStructure rp;
  bool has_coproducts = false, has_products = false;
  std::vector<ObjOf<C>> objs;
  std::vector<MorOf<C>> mors;
  std::map<ObjOf<C>, ObjId> obj_index;
  std::map<MorOf<C>, MorId> mor_index;

  ObjId obj_id(const ObjOf<C>& a) const {
    auto it = obj_index.find(a);
    if (it == obj_index.end()) throw UnknownObject("object outside the materialized scope");
    return it->second;
  }
  MorId mor_id(const MorOf<C>& f) const {
    auto it = mor_index.find(f);
    if (it == mor_index.end()) throw UnknownMorphism("morphism outside the materialized scope");
    return it->second;
  }
  FinView view() const {
    return FinView(rcat, has_coproducts ? &cp : nullptr, has_products ? &rp : nullptr);
  }
};

template <RestrictionCategory C>
Materialized<C> materialize(const C& c, std::size_t cap = 10000) {
  Materialized<C> m;
  CategoryData d;
  for (auto&& a : c.objects()) {
    m.obj_index.emplace(a, static_cast<ObjId>(m.objs.size()));
    m.objs.push_back(a);
    d.objects.push_back(c.obj_name(a));
  }
  for (auto& a : m.objs)
    for (auto& b : m.objs)
      for (auto&& f : c.hom(a, b)) {
        if (m.mors.size() >= cap)
          throw CapExceeded("materialize: more than " + std::to_string(cap) + " morphisms");
        m.mor_index.emplace(f, static_cast<MorId>(m.mors.size()));
        d.morphisms.push_back({c.name(f), m.obj_id(a), m.obj_id(b)});
        m.mors.push_back(f);
      }
  for (auto& a : m.objs) d.identity.push_back(m.mor_id(c.id(a)));
  FinCategory base(std::move(d), [&](MorId g, MorId f) {
    return m.mor_id(c.compose(m.mors[g], m.mors[f]));
  });
  std::vector<MorId> r;
  for (auto& f : m.mors) r.push_back(m.mor_id(c.rst(f)));
  m.rcat = FinRCat(std::move(base), std::move(r));

  auto here = [&](const auto& o) { return m.obj_index.count(o) != 0; };
  if constexpr (HasCoproducts<C>) {
    std::map<std::pair<ObjId, ObjId>, CoproductStructure::Sum> sums;
    for (auto& a : m.objs)
      for (auto& b : m.objs)
        if (auto s = c.sum(a, b); s && here(*s))
          sums[{m.obj_id(a), m.obj_id(b)}] = {m.obj_id(*s), m.mor_id(c.inl(a, b)),
                                              m.mor_id(c.inr(a, b))};
    std::optional<ObjId> z;
    if (auto i = c.initial(); i && here(*i)) z = m.obj_id(*i);
    m.cp = CoproductStructure(m.rcat.base(), std::move(sums), z);
    m.has_coproducts = true;
  }
  if constexpr (HasRestrictionProducts<C>) {
    ProductStructure& s = m.rp;
    for (auto& a : m.objs)
      for (auto& b : m.objs)
        if (auto p = c.prod(a, b); p && here(*p))
          s.prods[{m.obj_id(a), m.obj_id(b)}] = {m.obj_id(*p), m.mor_id(c.proj1(a, b)),
                                                 m.mor_id(c.proj2(a, b))};
    for (auto& a : m.objs)
      if (auto p = c.prod(a, a); p && here(*p)) s.diag[m.obj_id(a)] = m.mor_id(c.diag(a));
    for (auto& [ab, pr] : s.prods)
      for (auto& [ab2, pr2] : s.prods)
        for (auto f : m.rcat.base().hom(ab.first, ab2.first))
          for (auto g : m.rcat.base().hom(ab.second, ab2.second))
            s.tensor[{f, g}] = m.mor_id(c.tensor(m.mors[f], m.mors[g]));
    if (auto t = c.terminal(); t && here(*t)) {
      s.terminal = m.obj_id(*t);
      for (auto& a : m.objs) s.to_terminal[m.obj_id(a)] = m.mor_id(c.to_terminal(a));
    }
    m.has_products = true;
  }
  return m;
}

}  // namespace rcat
