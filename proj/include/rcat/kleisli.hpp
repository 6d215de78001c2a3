#pragma once

// Symmetric monoidal monads on a copy category (copy monads, equational
// lifting), the monad +1 on a distributive category and its Kleisli
// restriction category, decisions there, distributive copy categories, and
// the extensive completion Total(K_r(D₊₁)).

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

#include "rcat/copy.hpp"
#include "rcat/decisions.hpp"
#include "rcat/distributive.hpp"
#include "rcat/extensive.hpp"
#include "rcat/total.hpp"
#include "rcat/views.hpp"

namespace rcat {

template <Category C>
std::optional<MorOf<C>> find_inverse(const C& c, const MorOf<C>& f) {
  for (auto&& g : c.hom(c.cod(f), c.dom(f)))
    if (c.compose(g, f) == c.id(c.dom(f)) && c.compose(f, g) == c.id(c.cod(f))) return g;
  return std::nullopt;
}

// ---- monoidal monads ---------------------------------------------------------

template <Category C>
struct MonoidalMonadData {
  std::function<ObjOf<C>(const ObjOf<C>&)> T_obj;
  std::function<MorOf<C>(const MorOf<C>&)> T;
  std::function<MorOf<C>(const ObjOf<C>&)> eta, mu;
  std::function<MorOf<C>(const ObjOf<C>&, const ObjOf<C>&)> phi;  // TA⊗TB -> T(A⊗B)
};

// ψ_{A,B} = φ_{A,B}(η_A⊗1) : A⊗TB -> T(A⊗B)
template <Category C>
MorOf<C> monad_psi(const C& c, const StrictMonoidalData<C>& m, const MonoidalMonadData<C>& t,
                   const ObjOf<C>& a, const ObjOf<C>& b) {
  return c.compose(t.phi(a, b), m.tensor(t.eta(a), c.id(t.T_obj(b))));
}

template <Category C>
MonoidalMonadData<C> identity_monad(const C& c, const StrictMonoidalData<C>& m) {
  return {[](const ObjOf<C>& a) { return a; }, [](const MorOf<C>& f) { return f; },
          [&c](const ObjOf<C>& a) { return c.id(a); }, [&c](const ObjOf<C>& a) { return c.id(a); },
          [&c, &m](const ObjOf<C>& a, const ObjOf<C>& b) { return c.id(*m.tensor_obj(a, b)); }};
}

// Functor, monad and monoidal-monad laws, then φ_{B,B}Δ_{TB} = TΔ_B and the
// naturality of the Kleisli copy maps η Δ against Kleisli maps in scope.
template <Category C>
LawReport check_copy_monad(const C& c, const StrictMonoidalData<C>& m, const CopyStructure<C>& cs,
                           const MonoidalMonadData<C>& t, const CheckOptions& o = {}) {
  LawReport rep;
  auto objs = objects_of(c);
  auto mors = all_morphisms(c);
  auto fail = [&](std::string tag, std::vector<std::string> w) {
    return rep.fail(o, std::move(tag), std::move(w));
  };
  auto on = [&](const MorOf<C>& f) { return c.name(f); };
  auto ob = [&](const ObjOf<C>& a) { return c.obj_name(a); };
  auto T = [&](const ObjOf<C>& a) { return t.T_obj(a); };
  auto X = [&](const ObjOf<C>& a, const ObjOf<C>& b) { return *m.tensor_obj(a, b); };
  // Kleisli g∘f for f : A -> TB, g : B -> TC
  auto kl = [&](const MorOf<C>& g, const ObjOf<C>& cc, const MorOf<C>& f) {
    return c.compose(t.mu(cc), c.compose(t.T(g), f));
  };

  for (auto& a : objs) {
    ++rep.checked;
    if (!(t.T(c.id(a)) == c.id(T(a))) && fail("functor-identity", {ob(a)})) return rep;
    auto ta = T(a);
    if (!(c.compose(t.mu(a), t.T(t.mu(a))) == c.compose(t.mu(a), t.mu(ta))) &&
        fail("monad-assoc", {ob(a)}))
      return rep;
    if (!(c.compose(t.mu(a), t.eta(ta)) == c.id(ta)) && fail("monad-unit-left", {ob(a)})) return rep;
    if (!(c.compose(t.mu(a), t.T(t.eta(a))) == c.id(ta)) && fail("monad-unit-right", {ob(a)}))
      return rep;
  }
  for (auto& f : mors) {
    auto a = c.dom(f), b = c.cod(f);
    ++rep.checked;
    if (!(c.compose(t.T(f), t.eta(a)) == c.compose(t.eta(b), f)) && fail("eta-natural", {on(f)}))
      return rep;
    if (!(c.compose(t.T(f), t.mu(a)) == c.compose(t.mu(b), t.T(t.T(f)))) &&
        fail("mu-natural", {on(f)}))
      return rep;
    for (auto& g : out_of(c, b)) {
      ++rep.checked;
      if (!(t.T(c.compose(g, f)) == c.compose(t.T(g), t.T(f))) &&
          fail("functor-compose", {on(g), on(f)}))
        return rep;
    }
  }
  for (auto& f : mors)
    for (auto& g : mors) {
      if (!m.tensor_obj(c.dom(f), c.dom(g)) || !m.tensor_obj(c.cod(f), c.cod(g))) continue;
      ++rep.checked;
      auto lhs = c.compose(t.phi(c.cod(f), c.cod(g)), m.tensor(t.T(f), t.T(g)));
      auto rhs = c.compose(t.T(m.tensor(f, g)), t.phi(c.dom(f), c.dom(g)));
      if (!(lhs == rhs) && fail("phi-natural", {on(f), on(g)})) return rep;
    }
  for (auto& a : objs)
    for (auto& b : objs) {
      if (!m.tensor_obj(a, b) || !m.tensor_obj(T(a), T(b))) continue;
      ++rep.checked;
      auto ab = X(a, b);
      if (!(c.compose(t.T(m.sym(a, b)), t.phi(a, b)) == c.compose(t.phi(b, a), m.sym(T(a), T(b)))) &&
          fail("phi-symmetry", {ob(a), ob(b)}))
        return rep;
      if (!(c.compose(t.phi(a, b), m.tensor(t.eta(a), t.eta(b))) == t.eta(ab)) &&
          fail("phi-unit", {ob(a), ob(b)}))
        return rep;
      auto lhs = c.compose(t.mu(ab), c.compose(t.T(t.phi(a, b)), t.phi(T(a), T(b))));
      auto rhs = c.compose(t.phi(a, b), m.tensor(t.mu(a), t.mu(b)));
      if (!(lhs == rhs) && fail("phi-multiplication", {ob(a), ob(b)})) return rep;
      for (auto& d : objs) {
        if (!m.tensor_obj(ab, d) || !m.tensor_obj(b, d)) continue;
        auto l = c.compose(t.phi(ab, d), m.tensor(t.phi(a, b), c.id(T(d))));
        auto r = c.compose(t.phi(a, X(b, d)), m.tensor(c.id(T(a)), t.phi(b, d)));
        if (!(l == r) && fail("phi-associative", {ob(a), ob(b), ob(d)})) return rep;
      }
    }
  const auto I = m.unit;
  for (auto& a : objs) {
    ++rep.checked;
    if (!(c.compose(t.phi(I, a), m.tensor(t.eta(I), c.id(T(a)))) == c.id(T(a))) &&
        fail("phi-unit", {ob(I), ob(a)}))
      return rep;
  }
  if (!rep.passed()) return rep;

  for (auto& b : objs) {
    if (!m.tensor_obj(b, b)) continue;
    ++rep.checked;
    auto tb = T(b);
    if (!(c.compose(t.phi(b, b), cs.copy(tb)) == t.T(cs.copy(b))) && fail("copy-monad", {ob(b)}))
      return rep;
  }
  if (!rep.passed()) return rep;
  // Kleisli copy η Δ and Kleisli tensor φ(f⊗g)
  for (auto& a : objs)
    for (auto& b : objs) {
      if (!m.tensor_obj(a, a) || !m.tensor_obj(b, b)) continue;
      for (auto&& f : c.hom(a, T(b))) {
        ++rep.checked;
        auto dk_a = c.compose(t.eta(X(a, a)), cs.copy(a));
        auto dk_b = c.compose(t.eta(X(b, b)), cs.copy(b));
        auto ff = c.compose(t.phi(b, b), m.tensor(f, f));
        if (!(kl(ff, X(b, b), dk_a) == kl(dk_b, X(b, b), f)) &&
            fail("kleisli-copy-natural", {c.name(f)}))
          return rep;
      }
    }
  return rep;
}

// Kleisli restriction of f : A -> TB through the copy structure:
// T(1⊗ε) ψ_{A,B} (1⊗f) Δ_A : A -> TA
template <Category C>
MorOf<C> copy_monad_restriction(const C& c, const StrictMonoidalData<C>& m,
                                const CopyStructure<C>& cs, const MonoidalMonadData<C>& t,
                                const MorOf<C>& f, const ObjOf<C>& b) {
  auto a = c.dom(f);
  auto p = m.tensor(c.id(a), cs.counit(b));
  return c.compose(t.T(p),
                   c.compose(monad_psi(c, m, t, a, b), c.compose(m.tensor(c.id(a), f), cs.copy(a))));
}

// ψ_{TA,A}Δ_{TA} = T(η_A⊗1)TΔ_A; when it holds the monad must be a copy monad;
// plus the two classifying equations r̄(η_B f) = η_A and r̄(1_{TA}) = Tη_A.
template <Category C>
LawReport check_equational_lifting(const C& c, const StrictMonoidalData<C>& m,
                                   const CopyStructure<C>& cs, const MonoidalMonadData<C>& t,
                                   const CheckOptions& o = {}) {
  LawReport rep;
  auto objs = objects_of(c);
  auto ob = [&](const ObjOf<C>& a) { return c.obj_name(a); };
  for (auto& a : objs) {
    if (!m.tensor_obj(a, a)) continue;
    ++rep.checked;
    auto ta = t.T_obj(a);
    auto lhs = c.compose(monad_psi(c, m, t, ta, a), cs.copy(ta));
    auto rhs = c.compose(t.T(m.tensor(t.eta(a), c.id(a))), t.T(cs.copy(a)));
    if (!(lhs == rhs) && rep.fail(o, "lifting", {ob(a)})) return rep;
  }
  if (rep.passed()) {
    auto cm = check_copy_monad(c, m, cs, t, o);
    rep.checked += cm.checked;
    if (!cm.passed())
      rep.fail(o, "lifting-implies-copy",
               cm.first() ? cm.first()->witness : std::vector<std::string>{},
               cm.first() ? cm.first()->tag : std::string{});
    if (rep.stop(o)) return rep;
  }
  for (auto&& f : all_morphisms(c)) {
    auto a = c.dom(f), b = c.cod(f);
    if (!m.tensor_obj(a, b)) continue;
    ++rep.checked;
    if (!(copy_monad_restriction(c, m, cs, t, c.compose(t.eta(b), f), b) == t.eta(a)) &&
        rep.fail(o, "classifying-eta", {c.name(f)}))
      return rep;
  }
  for (auto& a : objs) {
    auto ta = t.T_obj(a);
    if (!m.tensor_obj(ta, a)) continue;
    ++rep.checked;
    if (!(copy_monad_restriction(c, m, cs, t, c.id(ta), a) == t.T(t.eta(a))) &&
        rep.fail(o, "classifying-identity", {ob(a)}))
      return rep;
  }
  return rep;
}

// ---- the monad +1 on a distributive category ---------------------------------

namespace detail {

template <class D>
ObjOf<D> need_obj(const std::optional<ObjOf<D>>& o, const char* what) {
  if (!o) throw StructureError(std::string("missing ") + what);
  return *o;
}

template <DistributiveCategory D>
ObjOf<D> one(const D& d) {
  return need_obj<D>(d.terminal(), "terminal object");
}
template <DistributiveCategory D>
ObjOf<D> plus1(const D& d, const ObjOf<D>& a) {
  return need_obj<D>(d.sum(a, one(d)), "A+1");
}
template <DistributiveCategory D>
ObjOf<D> times(const D& d, const ObjOf<D>& a, const ObjOf<D>& b) {
  return need_obj<D>(d.prod(a, b), "A×B");
}
template <DistributiveCategory D>
ObjOf<D> plus(const D& d, const ObjOf<D>& a, const ObjOf<D>& b) {
  return need_obj<D>(d.sum(a, b), "A+B");
}
// X×Y -> Y×X
template <DistributiveCategory D>
MorOf<D> swap(const D& d, const ObjOf<D>& x, const ObjOf<D>& y) {
  return d.pair(d.proj2(x, y), d.proj1(x, y));
}
// f+1 : A+1 -> B+1
template <DistributiveCategory D>
MorOf<D> plus_one_map(const D& d, const MorOf<D>& f) {
  auto b = d.cod(f), t = one(d);
  return d.copair(d.compose(d.inl(b, t), f), d.inr(b, t));
}
// [1, inr] : (A+1)+1 -> A+1
template <DistributiveCategory D>
MorOf<D> plus_one_mu(const D& d, const ObjOf<D>& a) {
  auto t = one(d), ta = plus1(d, a);
  return d.copair(d.id(ta), d.inr(a, t));
}
// (A+1)×(B+1) -> A×B + 1, defined exactly on the pairs of defined points
template <DistributiveCategory D>
MorOf<D> plus_one_phi(const D& d, const ObjOf<D>& a, const ObjOf<D>& b) {
  auto t = one(d), ta = plus1(d, a);
  auto ab = times(d, a, b);
  auto bang_to = [&](const ObjOf<D>& x) { return d.compose(d.inr(ab, t), d.to_terminal(x)); };
  // B×A + B×1 -> A×B + 1
  auto inner = d.copair(d.compose(d.inl(ab, t), swap(d, b, a)), bang_to(times(d, b, t)));
  auto left = d.compose(inner, d.compose(d.dist_inv(b, a, t), swap(d, ta, b)));
  auto outer = d.copair(left, bang_to(times(d, ta, t)));
  return d.compose(outer, d.dist_inv(ta, b, t));
}

template <DistributiveCategory D>
bool has_dist_inv(const D& d, const ObjOf<D>& a, const ObjOf<D>& b, const ObjOf<D>& c) {
  try {
    (void)d.dist_inv(a, b, c);
    return true;
  } catch (const StructureError&) {
    return false;
  }
}

}  // namespace detail

// T = +1, η = inl, μ = [1, inr], φ through δ⁻¹ (undefined when either side is)
template <DistributiveCategory D>
MonoidalMonadData<D> plus_one_monad(const D& d) {
  return {[&d](const ObjOf<D>& a) { return detail::plus1(d, a); },
          [&d](const MorOf<D>& f) { return detail::plus_one_map(d, f); },
          [&d](const ObjOf<D>& a) { return d.inl(a, detail::one(d)); },
          [&d](const ObjOf<D>& a) { return detail::plus_one_mu(d, a); },
          [&d](const ObjOf<D>& a, const ObjOf<D>& b) { return detail::plus_one_phi(d, a, b); }};
}

// ---- Kleisli category of +1 ----------------------------------------------------

template <DistributiveCategory D>
struct KleisliMor {
  MorOf<D> f;  // dom -> cod + 1 in D
  ObjOf<D> dom, cod;
  auto operator<=>(const KleisliMor&) const = default;
  bool operator==(const KleisliMor&) const = default;
};

// D₊₁ on the objects of D whose structure it needs exists: maps A -> B+1,
// composition [g, inr]·f, r̄f = (π₁+!)δ⁻¹⟨1,f⟩, coproducts and products of D
// made Kleisli by η, tensor φ(f×g).
template <DistributiveCategory D>
class KleisliPlusOne {
 public:
  using Obj = ObjOf<D>;
  using Mor = KleisliMor<D>;

  explicit KleisliPlusOne(const D&&) = delete;  // keeps a pointer to d
  explicit KleisliPlusOne(const D& d) : d_(&d) {
    auto t = detail::one(d);
    for (auto&& a : d.objects())
      if (d.sum(a, t)) objs_.push_back(a);
    // drop objects whose restriction cannot be formed against the others
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < objs_.size(); ++i) {
        bool ok = true;
        for (auto& b : objs_) ok = ok && usable(objs_[i], b);
        if (!ok) {
          objs_.erase(objs_.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
      }
    }
  }
  const D& base() const { return *d_; }

  const std::vector<Obj>& objects() const { return objs_; }
  std::vector<Mor> hom(const Obj& a, const Obj& b) const {
    std::vector<Mor> out;
    for (auto&& f : d_->hom(a, detail::plus1(*d_, b))) out.push_back(Mor{f, a, b});
    return out;
  }
  Obj dom(const Mor& f) const { return f.dom; }
  Obj cod(const Mor& f) const { return f.cod; }
  Mor id(const Obj& a) const { return {eta(a), a, a}; }
  Mor compose(const Mor& g, const Mor& f) const {
    if (!(g.dom == f.cod)) throw ShapeMismatch("Kleisli compose: " + name(g) + " . " + name(f));
    auto t = detail::one(*d_);
    return {d_->compose(d_->copair(g.f, d_->inr(g.cod, t)), f.f), f.dom, g.cod};
  }
  // (π₁+!)·δ⁻¹·⟨1,f⟩ : A -> A×(B+1) -> A×B + A×1 -> A+1
  Mor rst(const Mor& f) const {
    auto a = f.dom, b = f.cod, t = detail::one(*d_);
    auto pi = d_->copair(d_->compose(d_->inl(a, t), d_->proj1(a, b)),
                         d_->compose(d_->inr(a, t), d_->to_terminal(detail::times(*d_, a, t))));
    return {d_->compose(pi, d_->compose(d_->dist_inv(a, b, t), d_->pair(d_->id(a), f.f))), a, a};
  }
  std::string name(const Mor& f) const { return d_->name(f.f); }
  std::string obj_name(const Obj& a) const { return d_->obj_name(a); }

  // Kleisli maps from D maps
  MorOf<D> eta(const Obj& a) const { return d_->inl(a, detail::one(*d_)); }
  Mor pure(const MorOf<D>& f) const {
    return {d_->compose(eta(d_->cod(f)), f), d_->dom(f), d_->cod(f)};
  }

  std::optional<Obj> sum(const Obj& a, const Obj& b) const { return admissible(d_->sum(a, b)); }
  Mor inl(const Obj& a, const Obj& b) const { return pure(d_->inl(a, b)); }
  Mor inr(const Obj& a, const Obj& b) const { return pure(d_->inr(a, b)); }
  Mor copair(const Mor& f, const Mor& g) const {
    return {d_->copair(f.f, g.f), detail::plus(*d_, f.dom, g.dom), f.cod};
  }
  std::optional<Obj> initial() const { return d_->initial(); }
  Mor from_initial(const Obj& a) const { return pure(d_->from_initial(a)); }

  std::optional<Obj> prod(const Obj& a, const Obj& b) const { return admissible(d_->prod(a, b)); }
  Mor proj1(const Obj& a, const Obj& b) const { return pure(d_->proj1(a, b)); }
  Mor proj2(const Obj& a, const Obj& b) const { return pure(d_->proj2(a, b)); }
  Mor diag(const Obj& a) const { return pure(d_->pair(d_->id(a), d_->id(a))); }
  // φ(f×g), or when D lacks the objects φ needs, the unique h with
  // π₁h = fπ₁·r̄(gπ₂) and π₂h = gπ₂·r̄(fπ₁)
  Mor tensor(const Mor& f, const Mor& g) const {
    try {
      return tensor_by_phi(f, g);
    } catch (const StructureError&) {
      auto a = detail::times(*d_, f.dom, g.dom), b = detail::times(*d_, f.cod, g.cod);
      auto fp = compose(f, proj1(f.dom, g.dom)), gq = compose(g, proj2(f.dom, g.dom));
      auto l = compose(fp, rst(gq)), r = compose(gq, rst(fp));
      for (auto& h : hom(a, b))
        if (compose(proj1(f.cod, g.cod), h) == l && compose(proj2(f.cod, g.cod), h) == r) return h;
      throw StructureError("Kleisli tensor of " + name(f) + " and " + name(g));
    }
  }
  Mor tensor_by_phi(const Mor& f, const Mor& g) const {
    auto ff = d_->pair(d_->compose(f.f, d_->proj1(f.dom, g.dom)),
                       d_->compose(g.f, d_->proj2(f.dom, g.dom)));
    return {d_->compose(detail::plus_one_phi(*d_, f.cod, g.cod), ff),
            detail::times(*d_, f.dom, g.dom), detail::times(*d_, f.cod, g.cod)};
  }
  std::optional<Obj> terminal() const { return d_->terminal(); }
  Mor to_terminal(const Obj& a) const { return pure(d_->to_terminal(a)); }

 private:
  // objects outside the scope are usable when D has everything their
  // restriction needs against the scope (always, for FinSetCat)
  std::optional<Obj> admissible(const std::optional<Obj>& s) const {
    if (!s) return s;
    auto it = admissible_.find(*s);
    if (it == admissible_.end()) {
      bool ok = d_->sum(*s, detail::one(*d_)).has_value() && usable(*s, *s);
      for (auto& b : objs_) ok = ok && usable(*s, b) && usable(b, *s);
      it = admissible_.emplace(*s, ok).first;
    }
    return it->second ? s : std::nullopt;
  }
  bool usable(const Obj& a, const Obj& b) const {
    auto t = detail::one(*d_);
    auto b1 = d_->sum(b, t), ab = d_->prod(a, b), a1 = d_->prod(a, t);
    if (!b1 || !ab || !a1 || !d_->sum(a, t) || !d_->prod(a, *b1) || !d_->sum(*ab, *a1)) return false;
    return detail::has_dist_inv(*d_, a, b, t);
  }

  const D* d_;
  std::vector<Obj> objs_;
  mutable std::map<Obj, bool> admissible_;
};

struct KleisliOptions {
  CheckOptions base;
  std::size_t cap = 10000;
  // above this many maps the copy laws over pairs and triples are sampled
  std::size_t exhaustive_copy_limit = 60;
  std::size_t copy_samples = 20000;
};

template <DistributiveCategory D>
struct KleisliRestriction {
  std::unique_ptr<KleisliPlusOne<D>> view;
  Materialized<KleisliPlusOne<D>> table;
  LawReport axioms, coproducts, zero, copy;
};

// builds D₊₁, checks the restriction axioms, restriction coproducts, the
// restriction zero and the counital copy structure (Δ, ε made Kleisli by η),
// throwing AssertionFailure if any fails, and returns the dense table
template <DistributiveCategory D>
KleisliRestriction<D> kleisli_restriction(const D& d, const KleisliOptions& ko = {}) {
  if constexpr (requires { d.validate(); }) d.validate();
  KleisliRestriction<D> out;
  out.view = std::make_unique<KleisliPlusOne<D>>(d);
  const auto& k = *out.view;
  if (k.objects().empty()) throw InvalidDistributiveData("no object A has A+1 and δ⁻¹ for A×(B+1)");
  auto must = [](const LawReport& r, const std::string& what) {
    if (r.passed()) return;
    std::string w;
    if (auto v = r.first()) {
      w = v->tag;
      for (auto& x : v->witness) w += " " + x;
    }
    throw AssertionFailure("Kleisli category fails " + what + ": " + w);
  };
  out.axioms = check_restriction_axioms(k, ko.base);
  must(out.axioms, "the restriction axioms");
  out.coproducts = check_restriction_coproducts(k, ko.base);
  must(out.coproducts, "restriction coproducts");
  out.zero = check_restriction_zero(k, ko.base);
  must(out.zero, "the restriction zero");
  auto m = monoidal_from_products(k);
  auto cs = copy_from_products(k);
  CopyCheckOptions co{ko.base, true};
  if (count_morphisms(k) > ko.exhaustive_copy_limit) co.base.samples = ko.copy_samples;
  try {
    out.copy = check_counital_copy(k, m, cs, co);
  } catch (const StructureError& e) {
    out.copy = truncated(std::string("copy laws need objects outside D: ") + e.what());
  }
  must(out.copy.status == Status::Truncated ? LawReport{} : out.copy, "the counital copy laws");
  out.table = materialize(k, ko.cap);
  return out;
}

// ---- decisions -------------------------------------------------------------------

template <DistributiveCategory D>
struct KleisliDecision {
  KleisliMor<D> h;
  bool axioms = false;         // D.1, D.2 and the restriction-inverse form
  bool matches_search = false; // equals find_decision's unique answer
};

// h = ((π₁+π₁)+!)·(δ⁻¹+1)·δ⁻¹·⟨1,f⟩ : C -> (C+C)+1 for f : C -> (A+B)+1
template <DistributiveCategory D>
KleisliDecision<D> decision_in_kleisli(const KleisliPlusOne<D>& k, const KleisliMor<D>& f,
                                       const ObjOf<D>& a, const ObjOf<D>& b) {
  const D& d = k.base();
  auto c = f.dom, t = detail::one(d);
  auto s = detail::plus(d, a, b);
  if (!(f.cod == s)) throw ShapeMismatch("decision: " + k.name(f) + " does not land in A+B");
  auto cc = detail::plus(d, c, c);
  auto ca = detail::times(d, c, a), cb = detail::times(d, c, b);
  auto pp = d.copair(d.compose(d.inl(c, c), d.proj1(c, a)), d.compose(d.inr(c, c), d.proj1(c, b)));
  auto sum_part = d.compose(d.inl(cc, t), d.compose(pp, d.dist_inv(c, a, b)));
  auto none_part = d.compose(d.inr(cc, t), d.to_terminal(detail::times(d, c, t)));
  auto h = d.compose(d.copair(sum_part, none_part),
                     d.compose(d.dist_inv(c, s, t), d.pair(d.id(c), f.f)));
  (void)ca;
  (void)cb;
  KleisliDecision<D> out{{h, c, cc}};
  out.axioms = is_decision_of(k, out.h, f, {a, b});
  auto found = find_decision(k, f, {a, b});
  out.matches_search = found && found->unique && found->h == out.h;
  return out;
}

// δ = [1×i, 1×j] : A×B + A×C -> A×(B+C) from restriction products and coproducts
template <class C>
  requires HasCoproducts<C> && HasRestrictionProducts<C>
MorOf<C> copy_delta(const C& c, const ObjOf<C>& a, const ObjOf<C>& b, const ObjOf<C>& d) {
  return c.copair(c.tensor(c.id(a), c.inl(b, d)), c.tensor(c.id(a), c.inr(b, d)));
}

// (π₁+π₁)·δ⁻¹·(1×f)·Δ_C for f : C -> A+B; nullopt when δ has no inverse in scope
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C> && HasRestrictionProducts<C>
std::optional<MorOf<C>> copy_decision(const C& c, const MorOf<C>& f, const ObjOf<C>& a,
                                      const ObjOf<C>& b) {
  auto x = c.dom(f);
  auto xa = c.prod(x, a), xb = c.prod(x, b), xx = c.sum(x, x);
  if (!xa || !xb || !xx) return std::nullopt;
  auto inv = find_inverse(c, copy_delta(c, x, a, b));
  if (!inv) return std::nullopt;
  auto pp = c.copair(c.compose(c.inl(x, x), c.proj1(x, a)), c.compose(c.inr(x, x), c.proj1(x, b)));
  return c.compose(pp, c.compose(*inv, c.compose(c.tensor(c.id(x), f), c.diag(x))));
}

// ---- distributive copy categories ------------------------------------------------

namespace detail {

// first triple (A,B,C) in scope whose δ has no inverse, by object names
template <class C>
std::optional<std::vector<std::string>> non_invertible_delta(const C& c, std::size_t* checked) {
  auto objs = objects_of(c);
  for (auto& a : objs)
    for (auto& b : objs)
      for (auto& d : objs) {
        auto bd = c.sum(b, d), ab = c.prod(a, b), ad = c.prod(a, d);
        if (!bd || !ab || !ad || !in_scope(c, *bd) || !in_scope(c, *ab) || !in_scope(c, *ad)) continue;
        auto abd = c.prod(a, *bd), sum = c.sum(*ab, *ad);
        if (!abd || !sum || !in_scope(c, *abd) || !in_scope(c, *sum)) continue;
        ++*checked;
        if (!find_inverse(c, copy_delta(c, a, b, d)))
          return std::vector<std::string>{c.obj_name(a), c.obj_name(b), c.obj_name(d)};
      }
  return std::nullopt;
}

}  // namespace detail

struct DistributiveCopyReport {
  LawReport report;
  bool distributive = false, total_distributive = false;
  bool kr_distributive = false, total_kr_distributive = false;
  bool extensive = false, has_zero = false;
};

// δ invertible for every triple in scope, the same question in Total(X),
// K_r(X) and Total(K_r(X)), and: extensive ⇔ distributive and a restriction
// zero, with the decision (π₁+π₁)δ⁻¹(1×f)Δ matched against the search
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C> && HasRestrictionProducts<C>
DistributiveCopyReport check_distributive_copy(const C& c, const CheckOptions& o = {}) {
  DistributiveCopyReport out;
  auto& rep = out.report;
  auto bad = detail::non_invertible_delta(c, &rep.checked);
  out.distributive = !bad;
  // the cross-checks below run regardless: they are part of the evidence
  if (bad) rep.fail(o, "delta-not-invertible", *bad);
  TotalView<C> tv(c);
  out.total_distributive = !detail::non_invertible_delta(tv, &rep.checked);
  KrView<C> kv(c);
  out.kr_distributive = !detail::non_invertible_delta(kv, &rep.checked);
  TotalView<KrView<C>> tkv(kv);
  out.total_kr_distributive = !detail::non_invertible_delta(tkv, &rep.checked);
  if (out.total_distributive != out.distributive)
    rep.fail(o, "cross-total", {}, "Total(X) disagrees with X");
  if (out.kr_distributive != out.distributive)
    rep.fail(o, "cross-kr", {}, "K_r(X) disagrees with X");
  if (out.total_kr_distributive != out.distributive)
    rep.fail(o, "cross-total-kr", {}, "Total(K_r(X)) disagrees with X");

  out.has_zero = find_zero(c).has_value() && check_restriction_zero(c, o).passed();
  out.extensive = out.has_zero && is_extensive_rcat(c, o).passed();
  if (out.extensive != (out.distributive && out.has_zero))
    rep.fail(o, "extensive-iff-distributive", {}, std::string("extensive=") + (out.extensive ? "1" : "0") +
                                   " distributive=" + (out.distributive ? "1" : "0") +
                                   " zero=" + (out.has_zero ? "1" : "0"));
  if (out.extensive && out.distributive) {
    auto objs = objects_of(c);
    for (auto& a : objs)
      for (auto& b : objs) {
        auto s = c.sum(a, b);
        if (!s || !in_scope(c, *s)) continue;
        for (auto& x : objs) {
          auto xs = c.prod(x, *s), xx = c.sum(x, x), xa = c.prod(x, a), xb = c.prod(x, b);
          if (!xs || !xx || !xa || !xb || !in_scope(c, *xs) || !in_scope(c, *xx) ||
              !in_scope(c, *xa) || !in_scope(c, *xb))
            continue;
          auto xab = c.sum(*xa, *xb);
          if (!xab || !in_scope(c, *xab)) continue;
          for (auto&& f : c.hom(x, *s)) {
            ++rep.checked;
            auto h = copy_decision(c, f, a, b);
            auto found = find_decision(c, f, {a, b});
            if ((!h || !found || !(found->h == *h)) &&
                rep.fail(o, "copy-formula-decision", {c.name(f)}))
              return out;
          }
        }
      }
  }
  return out;
}

// ---- extensive completion --------------------------------------------------------

struct CompletionOptions {
  KleisliOptions kleisli;
  std::size_t cap = 20000;
};

template <DistributiveCategory D>
struct Completion {
  std::unique_ptr<KleisliRestriction<D>> kleisli;
  std::unique_ptr<FinView> kleisli_view;
  std::unique_ptr<Materialized<KrView<FinView>>> split;
  std::unique_ptr<FinView> split_view;
  std::unique_ptr<TotalView<FinView>> total_view;
  std::unique_ptr<Materialized<TotalView<FinView>>> total;

  LawReport extensive, products, functor, preservation, equivalence;
  // for every object of the result, a D object it is isomorphic to under N
  std::vector<std::pair<ObjId, ObjOf<D>>> iso_to_image;

  FinView view() const { return total->view(); }
  const FinRCat& rcat() const { return total->rcat; }

  // N(A) = (A, 1)
  ObjId N(const ObjOf<D>& a) const {
    const auto& kl = kleisli->table;
    auto ka = kl.obj_id(a);
    SplitObject<FinView> s{ka, kl.rcat.base().id(ka)};
    return total->obj_id(split->obj_id(s));
  }
  // N(f) = η·f
  MorId N_map(const MorOf<D>& f) const {
    const auto& kv = *kleisli->view;
    const auto& kl = kleisli->table;
    auto kf = kl.mor_id(kv.pure(f));
    auto a = kl.obj_id(kv.base().dom(f)), b = kl.obj_id(kv.base().cod(f));
    SplitObject<FinView> sa{a, kl.rcat.base().id(a)}, sb{b, kl.rcat.base().id(b)};
    return total->mor_id(split->mor_id(SplitMor<FinView>{kf, sa, sb}));
  }
};

// Total(K_r(D₊₁)) with N : D -> it.  Asserts (AssertionFailure) extensivity,
// the chosen products being products, functoriality of N, and preservation of
// products, coproducts, terminal and initial up to the comparison maps.
// `equivalence` records whether N is fully faithful and essentially
// surjective, which holds when D is already extensive.
template <DistributiveCategory D>
Completion<D> extensive_completion(const D& d, const CompletionOptions& co = {}) {
  Completion<D> out;
  out.kleisli = std::make_unique<KleisliRestriction<D>>(kleisli_restriction(d, co.kleisli));
  out.kleisli_view = std::make_unique<FinView>(out.kleisli->table.view());
  out.split = std::make_unique<Materialized<KrView<FinView>>>(split_idempotents(*out.kleisli_view, co.cap));
  out.split_view = std::make_unique<FinView>(out.split->view());
  out.total_view = std::make_unique<TotalView<FinView>>(*out.split_view);
  out.total = std::make_unique<Materialized<TotalView<FinView>>>(materialize(*out.total_view, co.cap));
  FinView v = out.view();
  const CheckOptions& o = co.kleisli.base;

  out.extensive = check_extensive_category(v, o);
  out.extensive.merge(check_chosen_coproducts(v, o));

  auto& pr = out.products;
  for (auto& [ab, p] : out.total->rp.prods) {
    ++pr.checked;
    if (!is_ordinary_product(v, p.p, p.q) &&
        pr.fail(o, "not-a-product", {v.obj_name(ab.first), v.obj_name(ab.second)}))
      break;
  }
  if (!out.total->rp.terminal || !is_terminal_in_scope(v, *out.total->rp.terminal))
    pr.fail(o, "no-terminal", {});

  const auto& kv = *out.kleisli->view;
  std::vector<ObjOf<D>> dobjs = kv.objects();
  auto& fn = out.functor;
  for (auto& a : dobjs) {
    ++fn.checked;
    if (!(out.N_map(d.id(a)) == v.id(out.N(a))) && fn.fail(o, "N-identity", {d.obj_name(a)})) break;
    for (auto& b : dobjs)
      for (auto&& f : d.hom(a, b))
        for (auto& c : dobjs)
          for (auto&& g : d.hom(b, c)) {
            ++fn.checked;
            if (!(out.N_map(d.compose(g, f)) == v.compose(out.N_map(g), out.N_map(f))) &&
                fn.fail(o, "N-compose", {d.name(g), d.name(f)}))
              goto functor_done;
          }
  }
functor_done:

  auto in_dom = [&](const ObjOf<D>& x) {
    return std::find(dobjs.begin(), dobjs.end(), x) != dobjs.end();
  };
  auto& pv = out.preservation;
  for (auto& a : dobjs)
    for (auto& b : dobjs) {
      auto na = out.N(a), nb = out.N(b);
      if (auto p = d.prod(a, b); p && in_dom(*p)) {
        ++pv.checked;
        auto tp = out.total->rp.find(na, nb);
        bool ok = tp != nullptr;
        if (ok) {
          // ⟨Np, Nq⟩ : N(A×B) -> NA × NB
          auto np = out.N_map(d.proj1(a, b)), nq = out.N_map(d.proj2(a, b));
          std::optional<MorId> cmp;
          for (auto h : v.hom(out.N(*p), tp->prod))
            if (v.compose(tp->p, h) == np && v.compose(tp->q, h) == nq) cmp = h;
          ok = cmp && find_inverse(v, *cmp).has_value();
        }
        if (!ok) pv.fail(o, "N-product", {d.obj_name(a), d.obj_name(b)});
      }
      if (auto s = d.sum(a, b); s && in_dom(*s)) {
        ++pv.checked;
        auto ts = out.total->cp.find(na, nb);
        bool ok = ts != nullptr;
        if (ok) {
          auto cmp = out.total->cp.copair(out.total->rcat.base(), out.N_map(d.inl(a, b)),
                                          out.N_map(d.inr(a, b)));
          ok = cmp != kNoMor && find_inverse(v, cmp).has_value();
        }
        if (!ok) pv.fail(o, "N-coproduct", {d.obj_name(a), d.obj_name(b)});
      }
    }
  if (auto t = d.terminal(); t && in_dom(*t)) {
    ++pv.checked;
    if (!is_terminal_in_scope(v, out.N(*t))) pv.fail(o, "N-terminal", {d.obj_name(*t)});
  }
  if (auto z = d.initial(); z && in_dom(*z)) {
    ++pv.checked;
    if (!is_initial_in_scope(v, out.N(*z))) pv.fail(o, "N-initial", {d.obj_name(*z)});
  }

  auto& eq = out.equivalence;
  for (auto& a : dobjs)
    for (auto& b : dobjs) {
      ++eq.checked;
      std::set<MorId> images;
      std::size_t n = 0;
      for (auto&& f : d.hom(a, b)) {
        images.insert(out.N_map(f));
        ++n;
      }
      if (images.size() != n || n != v.hom(out.N(a), out.N(b)).size())
        eq.fail(o, "N-not-fully-faithful", {d.obj_name(a), d.obj_name(b)});
    }
  for (auto x : v.objects()) {
    ++eq.checked;
    bool found = false;
    for (auto& a : dobjs) {
      for (auto f : v.hom(x, out.N(a)))
        if (find_inverse(v, f)) {
          out.iso_to_image.emplace_back(x, a);
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found && eq.fail(o, "N-not-essentially-surjective", {v.obj_name(x)})) return out;
  }

  auto must = [](const LawReport& r, const std::string& what) {
    if (r.passed()) return;
    std::string w;
    if (auto f = r.first()) {
      w = f->tag;
      for (auto& x : f->witness) w += " " + x;
    }
    throw AssertionFailure("extensive completion: " + what + ": " + w);
  };
  must(out.extensive, "not extensive");
  must(out.products, "products");
  must(out.functor, "N is not a functor");
  must(out.preservation, "N does not preserve structure");
  return out;
}

}  // namespace rcat
