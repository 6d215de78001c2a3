#pragma once

// Counital copy categories: a strict symmetric monoidal structure with
// copy maps Δ : A -> A⊗A and counits ε : A -> I that are coassociative,
// cocommutative, counital and monoidally natural.  Also Copy(V), the
// cocommutative comonoids of V with cosemigroup maps.

#include <functional>
#include <map>
#include <memory>
#include <random>

#include "rcat/products.hpp"
#include "rcat/restriction.hpp"
#include "rcat/views.hpp"

namespace rcat {

template <Category C>
struct StrictMonoidalData {
  std::function<std::optional<ObjOf<C>>(const ObjOf<C>&, const ObjOf<C>&)> tensor_obj;
  std::function<MorOf<C>(const MorOf<C>&, const MorOf<C>&)> tensor;
  ObjOf<C> unit;
  std::function<MorOf<C>(const ObjOf<C>&, const ObjOf<C>&)> sym;  // τ_{A,B}
};

template <Category C>
struct CopyStructure {
  std::function<MorOf<C>(const ObjOf<C>&)> copy;    // Δ_A
  std::function<MorOf<C>(const ObjOf<C>&)> counit;  // ε_A
};

// ⊗ = restriction product, I = restriction terminal, τ = (q×p)Δ
template <class C>
  requires HasRestrictionProducts<C>
StrictMonoidalData<C> monoidal_from_products(const C& c) {
  auto t = c.terminal();
  if (!t) throw StructureError("monoidal_from_products: no terminal object");
  return {[&c](const ObjOf<C>& a, const ObjOf<C>& b) { return c.prod(a, b); },
          [&c](const MorOf<C>& f, const MorOf<C>& g) { return c.tensor(f, g); }, *t,
          [&c](const ObjOf<C>& a, const ObjOf<C>& b) {
            auto ab = *c.prod(a, b);
            if (c.prod(ab, ab)) return c.compose(c.tensor(c.proj2(a, b), c.proj1(a, b)), c.diag(ab));
            // without (A×B)×(A×B): the pairing ⟨q, p⟩ of two total maps
            auto ba = *c.prod(b, a);
            for (auto&& h : c.hom(ab, ba))
              if (c.compose(c.proj1(b, a), h) == c.proj2(a, b) &&
                  c.compose(c.proj2(b, a), h) == c.proj1(a, b))
                return MorOf<C>(h);
            throw StructureError("no symmetry " + c.obj_name(a) + "×" + c.obj_name(b));
          }};
}

template <class C>
  requires HasRestrictionProducts<C>
CopyStructure<C> copy_from_products(const C& c) {
  return {[&c](const ObjOf<C>& a) { return c.diag(a); },
          [&c](const ObjOf<C>& a) { return c.to_terminal(a); }};
}

// r̄f = (1⊗ε)(1⊗f)Δ : A -> A⊗B -> A⊗I = A
template <Category C>
MorOf<C> copy_restriction(const C& c, const StrictMonoidalData<C>& m, const CopyStructure<C>& cs,
                          const MorOf<C>& f) {
  auto a = c.dom(f), b = c.cod(f);
  auto p = m.tensor(c.id(a), cs.counit(b));
  return c.compose(p, c.compose(m.tensor(c.id(a), f), cs.copy(a)));
}

// c with the restriction derived from its copy structure
template <Category C>
class DerivedRestriction {
 public:
  using Obj = ObjOf<C>;
  using Mor = MorOf<C>;

  DerivedRestriction(const C& c, const StrictMonoidalData<C>& m, const CopyStructure<C>& cs)
      : c_(&c), m_(&m), cs_(&cs) {}

  decltype(auto) objects() const { return c_->objects(); }
  decltype(auto) hom(const Obj& a, const Obj& b) const { return c_->hom(a, b); }
  Obj dom(const Mor& f) const { return c_->dom(f); }
  Obj cod(const Mor& f) const { return c_->cod(f); }
  Mor id(const Obj& a) const { return c_->id(a); }
  Mor compose(const Mor& g, const Mor& f) const { return c_->compose(g, f); }
  Mor rst(const Mor& f) const { return copy_restriction(*c_, *m_, *cs_, f); }
  std::string name(const Mor& f) const { return c_->name(f); }
  std::string obj_name(const Obj& a) const { return c_->obj_name(a); }

 private:
  const C* c_;
  const StrictMonoidalData<C>* m_;
  const CopyStructure<C>* cs_;
};

struct CopyCheckOptions {
  CheckOptions base;
  // also check that the derived restriction satisfies R.1-R.4 and that the
  // total maps are exactly the counit-preserving ones
  bool derived = true;
};

// Strict symmetric monoidal laws, then the copy laws.  Laws that need a
// missing tensor are skipped; with base.samples the laws quantified over two
// or three maps are checked on random instances.
template <Category C>
LawReport check_counital_copy(const C& c, const StrictMonoidalData<C>& m, const CopyStructure<C>& cs,
                              const CopyCheckOptions& co = {}) {
  const CheckOptions& o = co.base;
  LawReport rep;
  auto objs = objects_of(c);
  auto mors = all_morphisms(c);
  const auto I = m.unit;
  auto T = [&](const ObjOf<C>& a, const ObjOf<C>& b) { return m.tensor_obj(a, b); };
  auto fail = [&](std::string tag, std::vector<std::string> w, std::string d = {}) {
    return rep.fail(o, std::move(tag), std::move(w), std::move(d));
  };
  auto on = [&](const MorOf<C>& f) { return c.name(f); };
  auto ob = [&](const ObjOf<C>& a) { return c.obj_name(a); };
  auto here = [&](const ObjOf<C>& a) { return in_scope(c, a); };

  // ---- strict symmetric monoidal structure
  for (auto& a : objs) {
    ++rep.checked;
    auto ia = T(I, a), ai = T(a, I);
    if ((!ia || !ai || !(*ia == a) || !(*ai == a)) && fail("unit-object", {ob(a)})) return rep;
  }
  for (auto& a : objs)
    for (auto& b : objs) {
      auto ab = T(a, b);
      if (!ab) continue;
      ++rep.checked;
      if (!(m.tensor(c.id(a), c.id(b)) == c.id(*ab)) && fail("tensor-identity", {ob(a), ob(b)}))
        return rep;
      for (auto& d : objs) {
        auto l = T(*ab, d);
        auto bd = T(b, d);
        if (!l || !bd) continue;
        auto r = T(a, *bd);
        if ((!r || !(*l == *r)) && fail("assoc-object", {ob(a), ob(b), ob(d)})) return rep;
      }
    }
  for (auto& f : mors) {
    ++rep.checked;
    if ((!(m.tensor(c.id(I), f) == f) || !(m.tensor(f, c.id(I)) == f)) && fail("unit-map", {on(f)}))
      return rep;
  }
  std::vector<std::pair<MorOf<C>, MorOf<C>>> composable;
  for (auto& f : mors)
    for (auto& g : out_of(c, c.cod(f))) composable.emplace_back(g, f);
  auto functor = [&](const std::pair<MorOf<C>, MorOf<C>>& p1,
                     const std::pair<MorOf<C>, MorOf<C>>& p2) {
    auto& [g, f] = p1;
    auto& [g2, f2] = p2;
    if (!T(c.dom(f), c.dom(f2)) || !T(c.cod(f), c.cod(f2)) || !T(c.cod(g), c.cod(g2)))
      return false;
    ++rep.checked;
    return !(c.compose(m.tensor(g, g2), m.tensor(f, f2)) ==
             m.tensor(c.compose(g, f), c.compose(g2, f2))) &&
           fail("tensor-functor", {on(g), on(f), on(g2), on(f2)});
  };
  auto natural = [&](const MorOf<C>& f, const MorOf<C>& g) {
    if (!T(c.dom(f), c.dom(g)) || !T(c.cod(f), c.cod(g))) return false;
    ++rep.checked;
    auto lhs = c.compose(m.sym(c.cod(f), c.cod(g)), m.tensor(f, g));
    auto rhs = c.compose(m.tensor(g, f), m.sym(c.dom(f), c.dom(g)));
    return !(lhs == rhs) && fail("sym-natural", {on(f), on(g)});
  };
  auto assoc = [&](const MorOf<C>& f, const MorOf<C>& g, const MorOf<C>& h) {
    auto fg = T(c.dom(f), c.dom(g)), fg2 = T(c.cod(f), c.cod(g));
    if (!fg || !fg2 || !T(*fg, c.dom(h)) || !T(*fg2, c.cod(h))) return false;
    ++rep.checked;
    return !(m.tensor(m.tensor(f, g), h) == m.tensor(f, m.tensor(g, h))) &&
           fail("assoc-map", {on(f), on(g), on(h)});
  };
  if (o.samples) {
    rep.sampled = true;
    std::mt19937_64 rng(o.seed);
    auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
    for (std::size_t s = 0; s < *o.samples && !mors.empty(); ++s) {
      if (functor(composable[pick(composable.size())], composable[pick(composable.size())]))
        return rep;
      auto& f = mors[pick(mors.size())];
      auto& g = mors[pick(mors.size())];
      if (natural(f, g) || assoc(f, g, mors[pick(mors.size())])) return rep;
    }
  } else {
    for (auto& p1 : composable)
      for (auto& p2 : composable)
        if (functor(p1, p2)) return rep;
    for (auto& f : mors)
      for (auto& g : mors) {
        if (natural(f, g)) return rep;
        for (auto& h : mors)
          if (assoc(f, g, h)) return rep;
      }
  }
  for (auto& a : objs)
    for (auto& b : objs) {
      if (!T(a, b)) continue;
      ++rep.checked;
      if (!(c.compose(m.sym(b, a), m.sym(a, b)) == c.id(*T(a, b))) &&
          fail("sym-involution", {ob(a), ob(b)}))
        return rep;
      for (auto& d : objs) {
        auto bd = T(b, d);
        if (!bd || !T(*T(a, b), d)) continue;
        auto lhs = m.sym(a, *bd);
        auto rhs = c.compose(m.tensor(c.id(b), m.sym(a, d)), m.tensor(m.sym(a, b), c.id(d)));
        if (!(lhs == rhs) && fail("hexagon", {ob(a), ob(b), ob(d)})) return rep;
      }
    }

  // ---- copy maps
  for (auto& a : objs) {
    auto aa = T(a, a);
    if (!aa) continue;
    ++rep.checked;
    auto d = cs.copy(a), e = cs.counit(a);
    if ((!(c.dom(d) == a) || !(c.cod(d) == *aa) || !(c.dom(e) == a) || !(c.cod(e) == I)) &&
        fail("copy-typed", {ob(a)}))
      return rep;
    if ((!(c.compose(m.tensor(e, c.id(a)), d) == c.id(a)) ||
         !(c.compose(m.tensor(c.id(a), e), d) == c.id(a))) &&
        fail("counit", {ob(a)}))
      return rep;
    if (!(c.compose(m.sym(a, a), d) == d) && fail("cocommutative", {ob(a)})) return rep;
    if (T(*aa, a) &&
        !(c.compose(m.tensor(d, c.id(a)), d) == c.compose(m.tensor(c.id(a), d), d)) &&
        fail("coassociative", {ob(a)}))
      return rep;
  }
  if (here(I)) {
    ++rep.checked;
    if ((!(cs.copy(I) == c.id(I)) || !(cs.counit(I) == c.id(I))) && fail("copy-unit", {ob(I)}))
      return rep;
  }
  for (auto& f : mors) {
    auto a = c.dom(f), b = c.cod(f);
    if (!T(a, a) || !T(b, b)) continue;
    ++rep.checked;
    if (!(c.compose(m.tensor(f, f), cs.copy(a)) == c.compose(cs.copy(b), f)) &&
        fail("copy-natural", {on(f)}))
      return rep;
  }
  for (auto& a : objs)
    for (auto& b : objs) {
      auto ab = T(a, b);
      if (!ab || !here(*ab) || !T(*ab, *ab) || !T(a, a) || !T(b, b)) continue;
      ++rep.checked;
      auto mid = m.tensor(m.tensor(c.id(a), m.sym(a, b)), c.id(b));
      if (!(cs.copy(*ab) == c.compose(mid, m.tensor(cs.copy(a), cs.copy(b)))) &&
          fail("copy-monoidal", {ob(a), ob(b)}))
        return rep;
      if (!(cs.counit(*ab) == m.tensor(cs.counit(a), cs.counit(b))) &&
          fail("counit-monoidal", {ob(a), ob(b)}))
        return rep;
    }
  if (!co.derived || !rep.passed()) return rep;

  // ---- the restriction it induces
  bool all_tensors = true;
  for (auto& a : objs)
    for (auto& b : objs) all_tensors = all_tensors && T(a, b).has_value();
  if (!all_tensors) {
    rep.note = "derived restriction not checked: some A⊗B is missing";
    return rep;
  }
  DerivedRestriction<C> dr(c, m, cs);
  auto ax = check_restriction_axioms(dr, o);
  rep.checked += ax.checked;
  for (auto& v : ax.violations)
    if (fail("derived-" + v.tag, v.witness, v.detail)) return rep;
  for (auto& f : mors) {
    ++rep.checked;
    bool counit_preserving = c.compose(cs.counit(c.cod(f)), f) == cs.counit(c.dom(f));
    bool total = dr.rst(f) == c.id(c.dom(f));
    if (counit_preserving != total && fail("total-counit", {on(f)})) return rep;
  }
  return rep;
}

// ---- the three equivalent descriptions on one instance -------------------

struct StructureEquivalence {
  LawReport restriction_products, p_category, counital_copy;
  bool agree() const {
    bool r = restriction_products.passed();
    return r == p_category.passed() && r == counital_copy.passed();
  }
};

// The canonical inter-derivations: ⊗ = ×, I = T, Δ, ε = t, τ = (q×p)Δ;
// the copy verdict also requires the derived restriction to be the given one.
template <class C>
  requires RestrictionCategory<C> && HasRestrictionProducts<C>
StructureEquivalence check_structure_equivalence(const C& c, const CheckOptions& o = {}) {
  StructureEquivalence out;
  out.restriction_products = check_restriction_products(c, o);
  out.p_category = check_p_category(c, o);
  auto m = monoidal_from_products(c);
  auto cs = copy_from_products(c);
  out.counital_copy = check_counital_copy(c, m, cs, {o, true});
  if (out.counital_copy.passed())
    for (auto&& f : all_morphisms(c)) {
      ++out.counital_copy.checked;
      if (!(copy_restriction(c, m, cs, f) == c.rst(f)) &&
          out.counital_copy.fail(o, "derived-matches", {c.name(f)}))
        break;
    }
  return out;
}

// ---- comonoids and Copy(V) -------------------------------------------------

template <Category C>
struct Comonoid {
  ObjOf<C> obj;
  MorOf<C> delta, counit;
  auto operator<=>(const Comonoid&) const = default;
  bool operator==(const Comonoid&) const = default;
};

// every cocommutative comonoid (C, δ, ε) on the objects of the scope
template <Category C>
std::vector<Comonoid<C>> enumerate_comonoids(const C& c, const StrictMonoidalData<C>& m,
                                             std::size_t cap = 100000) {
  std::vector<Comonoid<C>> out;
  const auto I = m.unit;
  for (auto&& a : c.objects()) {
    auto aa = m.tensor_obj(a, a);
    if (!aa) continue;
    auto ds = hom_of(c, a, *aa);
    auto es = hom_of(c, a, I);
    if (ds.size() * es.size() > cap)
      throw CapExceeded("comonoids on " + c.obj_name(a) + ": " +
                        std::to_string(ds.size() * es.size()) + " candidates");
    bool assoc = m.tensor_obj(*aa, a).has_value();
    for (auto& e : es)
      for (auto& d : ds) {
        if (!(c.compose(m.tensor(e, c.id(a)), d) == c.id(a)) ||
            !(c.compose(m.tensor(c.id(a), e), d) == c.id(a)))
          continue;
        if (!(c.compose(m.sym(a, a), d) == d)) continue;
        if (assoc && !(c.compose(m.tensor(d, c.id(a)), d) == c.compose(m.tensor(c.id(a), d), d)))
          continue;
        out.push_back({a, d, e});
      }
  }
  return out;
}

template <Category C>
struct CopyMor {
  MorOf<C> f;
  Comonoid<C> dom, cod;
  auto operator<=>(const CopyMor&) const = default;
  bool operator==(const CopyMor&) const = default;
};

// Copy(V): objects the given comonoids, maps the cosemigroup homomorphisms
template <Category C>
class CopyView {
 public:
  using Obj = Comonoid<C>;
  using Mor = CopyMor<C>;

  CopyView(const C& v, const StrictMonoidalData<C>& m, std::vector<Obj> comonoids)
      : v_(&v), m_(&m), objs_(std::move(comonoids)) {}

  const std::vector<Obj>& objects() const { return objs_; }
  std::vector<Mor> hom(const Obj& a, const Obj& b) const {
    std::vector<Mor> out;
    auto aa = m_->tensor_obj(a.obj, a.obj), bb = m_->tensor_obj(b.obj, b.obj);
    if (!aa || !bb) return out;
    for (auto&& f : v_->hom(a.obj, b.obj))
      if (v_->compose(b.delta, f) == v_->compose(m_->tensor(f, f), a.delta)) out.push_back({f, a, b});
    return out;
  }
  Obj dom(const Mor& f) const { return f.dom; }
  Obj cod(const Mor& f) const { return f.cod; }
  Mor id(const Obj& a) const { return {v_->id(a.obj), a, a}; }
  Mor compose(const Mor& g, const Mor& f) const {
    if (!(g.dom == f.cod)) throw ShapeMismatch("Copy compose: " + name(g) + " . " + name(f));
    return {v_->compose(g.f, f.f), f.dom, g.cod};
  }
  std::string name(const Mor& f) const { return v_->name(f.f) + "@" + obj_name(f.dom) + ">" + obj_name(f.cod); }
  std::string obj_name(const Obj& a) const {
    return "(" + escape(v_->obj_name(a.obj)) + "|" + escape(v_->name(a.delta)) + "|" +
           escape(v_->name(a.counit)) + ")";
  }

  // (C,δ,ε)⊗(D,δ',ε') = (C⊗D, (1⊗τ⊗1)(δ⊗δ'), ε⊗ε')
  std::optional<Obj> tensor_obj(const Obj& a, const Obj& b) const {
    auto ab = m_->tensor_obj(a.obj, b.obj);
    auto aa = m_->tensor_obj(a.obj, a.obj), bb = m_->tensor_obj(b.obj, b.obj);
    if (!ab || !aa || !bb) return std::nullopt;
    auto mid = m_->tensor(m_->tensor(v_->id(a.obj), m_->sym(a.obj, b.obj)), v_->id(b.obj));
    return Obj{*ab, v_->compose(mid, m_->tensor(a.delta, b.delta)), m_->tensor(a.counit, b.counit)};
  }
  Obj unit() const { return {m_->unit, v_->id(m_->unit), v_->id(m_->unit)}; }
  Mor tensor(const Mor& f, const Mor& g) const {
    return {m_->tensor(f.f, g.f), *tensor_obj(f.dom, g.dom), *tensor_obj(f.cod, g.cod)};
  }
  Mor sym(const Obj& a, const Obj& b) const {
    return {m_->sym(a.obj, b.obj), *tensor_obj(a, b), *tensor_obj(b, a)};
  }
  Mor copy(const Obj& a) const { return {a.delta, a, *tensor_obj(a, a)}; }
  Mor counit(const Obj& a) const { return {a.counit, a, unit()}; }

 private:
  static std::string escape(const std::string& s) { return escape_name(s); }

  const C* v_;
  const StrictMonoidalData<C>* m_;
  std::vector<Obj> objs_;
};

template <Category C>
StrictMonoidalData<CopyView<C>> copy_view_monoidal(const CopyView<C>& v) {
  using O = ObjOf<CopyView<C>>;
  using M = MorOf<CopyView<C>>;
  return {[&v](const O& a, const O& b) { return v.tensor_obj(a, b); },
          [&v](const M& f, const M& g) { return v.tensor(f, g); }, v.unit(),
          [&v](const O& a, const O& b) { return v.sym(a, b); }};
}

template <Category C>
CopyStructure<CopyView<C>> copy_view_structure(const CopyView<C>& v) {
  using O = ObjOf<CopyView<C>>;
  return {[&v](const O& a) { return v.copy(a); }, [&v](const O& a) { return v.counit(a); }};
}

// Every family of comonoids, one per object of the scope, that is a counital
// copy structure for m (natural and monoidal).
template <Category C>
std::vector<CopyStructure<C>> find_copy_structures(const C& c, const StrictMonoidalData<C>& m,
                                                   std::size_t cap = 100000) {
  auto all = enumerate_comonoids(c, m, cap);
  auto objs = objects_of(c);
  std::vector<std::vector<Comonoid<C>>> per(objs.size());
  for (auto& k : all)
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (objs[i] == k.obj) per[i].push_back(k);
  std::vector<CopyStructure<C>> out;
  std::vector<std::size_t> pick(objs.size(), 0);
  for (auto& p : per)
    if (p.empty()) return out;
  while (true) {
    auto table = std::make_shared<std::map<ObjOf<C>, Comonoid<C>>>();
    for (std::size_t i = 0; i < objs.size(); ++i) table->emplace(objs[i], per[i][pick[i]]);
    CopyStructure<C> cs{[table](const ObjOf<C>& a) { return table->at(a).delta; },
                        [table](const ObjOf<C>& a) { return table->at(a).counit; }};
    if (check_counital_copy(c, m, cs, {{}, false}).passed()) out.push_back(cs);
    std::size_t i = 0;
    while (i < objs.size() && ++pick[i] == per[i].size()) pick[i++] = 0;
    if (i == objs.size()) break;
  }
  return out;
}

}  // namespace rcat
