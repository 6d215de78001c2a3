#pragma once

// Restriction products, p-categories, restriction terminals, products in the
// ordinary sense and the lattices of restriction idempotents they induce.

#include <algorithm>
#include <functional>

#include "rcat/coproducts.hpp"
#include "rcat/errors.hpp"
#include "rcat/report.hpp"
#include "rcat/restriction.hpp"

namespace rcat {

namespace detail {

template <class C>
bool has_prod(const C& c, const ObjOf<C>& a, const ObjOf<C>& b) {
  return c.prod(a, b).has_value();
}

// p_{A,B}·(1×f)·Δ_A for f : A -> B
template <class C>
MorOf<C> pairing_restriction(const C& c, const MorOf<C>& f) {
  auto a = c.dom(f), b = c.cod(f);
  return c.compose(c.proj1(a, b), c.compose(c.tensor(c.id(a), f), c.diag(a)));
}

}  // namespace detail

// Robinson-Rosolini dom f = p·(1×f)·Δ
template <class C>
  requires HasRestrictionProducts<C>
MorOf<C> derive_restriction(const C& c, const MorOf<C>& f) {
  if (!detail::has_prod(c, c.dom(f), c.dom(f)) || !detail::has_prod(c, c.dom(f), c.cod(f)))
    throw StructureError("derive_restriction: missing product for " + c.name(f));
  return detail::pairing_restriction(c, f);
}

// Laws of binary restriction products and a restriction terminal: totality,
// triangle laws, (p×q)Δ = 1, lax naturality of p, q and Δ, × a restriction
// functor, plus the consequences r̄((f×g)Δ) = r̄f·r̄g and Δf = (f×f)Δ.
template <class C>
  requires RestrictionCategory<C> && HasRestrictionProducts<C>
LawReport check_restriction_products(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  auto objs = objects_of(c);
  auto mors = all_morphisms(c);
  auto fail = [&](std::string tag, std::vector<std::string> w, std::string d = {}) {
    return rep.fail(o, std::move(tag), std::move(w), std::move(d));
  };
  for (auto& a : objs) {
    if (!detail::has_prod(c, a, a)) continue;
    ++rep.checked;
    auto d = c.diag(a);
    if (!is_total(c, d) && fail("diag-total", {c.name(d)})) return rep;
    auto p = c.proj1(a, a), q = c.proj2(a, a);
    if (!(c.compose(p, d) == c.id(a)) && fail("triangle-p", {c.obj_name(a)})) return rep;
    if (!(c.compose(q, d) == c.id(a)) && fail("triangle-q", {c.obj_name(a)})) return rep;
  }
  for (auto& a : objs)
    for (auto& b : objs) {
      if (!detail::has_prod(c, a, b)) continue;
      ++rep.checked;
      auto p = c.proj1(a, b), q = c.proj2(a, b);
      if (!is_total(c, p) && fail("proj-total", {c.name(p)})) return rep;
      if (!is_total(c, q) && fail("proj-total", {c.name(q)})) return rep;
      auto ab = *c.prod(a, b);
      if (!detail::has_prod(c, ab, ab)) continue;
      auto pq = c.tensor(p, q);
      if (!(c.compose(pq, c.diag(ab)) == c.id(ab)) &&
          fail("pairing-projections", {c.obj_name(a), c.obj_name(b)}))
        return rep;
    }
  if (auto t = c.terminal()) {
    for (auto& a : objs) {
      ++rep.checked;
      auto ta = c.to_terminal(a);
      if (!is_total(c, ta) && fail("terminal-total", {c.name(ta)})) return rep;
    }
    if (!(c.to_terminal(*t) == c.id(*t)) && fail("terminal-identity", {c.obj_name(*t)}))
      return rep;
    for (auto& f : mors) {
      ++rep.checked;
      if (!(c.compose(c.to_terminal(c.cod(f)), f) == c.compose(c.to_terminal(c.dom(f)), c.rst(f))) &&
          fail("terminal-lax-natural", {c.name(f)}))
        return rep;
    }
  }
  for (auto& f : mors)
    for (auto& g : mors) {
      auto a = c.dom(f), b = c.dom(g), a2 = c.cod(f), b2 = c.cod(g);
      if (!detail::has_prod(c, a, b) || !detail::has_prod(c, a2, b2)) continue;
      ++rep.checked;
      auto fg = c.tensor(f, g);
      auto rfg = c.tensor(c.rst(f), c.rst(g));
      if (!(c.rst(fg) == rfg) && fail("tensor-restriction", {c.name(f), c.name(g)})) return rep;
      if (!(c.compose(c.proj1(a2, b2), fg) == c.compose(f, c.compose(c.proj1(a, b), rfg))) &&
          fail("p-lax-natural", {c.name(f), c.name(g)}))
        return rep;
      if (!(c.compose(c.proj2(a2, b2), fg) == c.compose(g, c.compose(c.proj2(a, b), rfg))) &&
          fail("q-lax-natural", {c.name(f), c.name(g)}))
        return rep;
      if (a == b && detail::has_prod(c, a, a)) {
        auto lhs = c.rst(c.compose(fg, c.diag(a)));
        if (!(lhs == c.compose(c.rst(f), c.rst(g))) &&
            fail("restriction-of-pairing", {c.name(f), c.name(g)}))
          return rep;
      }
    }
  for (auto& f : mors) {
    auto a = c.dom(f), b = c.cod(f);
    if (!detail::has_prod(c, a, a) || !detail::has_prod(c, b, b)) continue;
    ++rep.checked;
    auto ff = c.compose(c.tensor(f, f), c.diag(a));
    auto df = c.compose(c.diag(b), f);
    if (!(c.compose(ff, c.rst(f)) == df) && fail("diag-lax-natural", {c.name(f)})) return rep;
    if (!(ff == df) && fail("diag-natural", {c.name(f)})) return rep;
  }
  // × is a functor
  for (auto& a : objs)
    for (auto& b : objs) {
      if (!detail::has_prod(c, a, b)) continue;
      ++rep.checked;
      if (!(c.tensor(c.id(a), c.id(b)) == c.id(*c.prod(a, b))) &&
          fail("tensor-identity", {c.obj_name(a), c.obj_name(b)}))
        return rep;
    }
  for (auto& f : mors)
    for (auto& f2 : out_of(c, c.cod(f)))
      for (auto& g : mors)
        for (auto& g2 : out_of(c, c.cod(g))) {
          if (!detail::has_prod(c, c.dom(f), c.dom(g)) ||
              !detail::has_prod(c, c.cod(f), c.cod(g)) ||
              !detail::has_prod(c, c.cod(f2), c.cod(g2)))
            continue;
          ++rep.checked;
          if (!(c.compose(c.tensor(f2, g2), c.tensor(f, g)) ==
                c.tensor(c.compose(f2, f), c.compose(g2, g))) &&
              fail("tensor-functor", {c.name(f2), c.name(f), c.name(g2), c.name(g)}))
            return rep;
        }
  return rep;
}

// The p-category diagrams for the same data, with × strictly associative;
// also asserts that p·(1×f)·Δ reproduces the stored restriction and, when a
// terminal is present, that it is a one-element object.
template <class C>
  requires RestrictionCategory<C> && HasRestrictionProducts<C>
LawReport check_p_category(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  auto objs = objects_of(c);
  auto mors = all_morphisms(c);
  auto fail = [&](std::string tag, std::vector<std::string> w, std::string d = {}) {
    return rep.fail(o, std::move(tag), std::move(w), std::move(d));
  };
  // × functor, Δ natural, p natural in the first and q in the second argument
  for (auto& f : mors)
    for (auto& f2 : out_of(c, c.cod(f)))
      for (auto& g : mors)
        for (auto& g2 : out_of(c, c.cod(g))) {
          if (!detail::has_prod(c, c.dom(f), c.dom(g)) ||
              !detail::has_prod(c, c.cod(f), c.cod(g)) ||
              !detail::has_prod(c, c.cod(f2), c.cod(g2)))
            continue;
          ++rep.checked;
          if (!(c.compose(c.tensor(f2, g2), c.tensor(f, g)) ==
                c.tensor(c.compose(f2, f), c.compose(g2, g))) &&
              fail("tensor-functor", {c.name(f2), c.name(f), c.name(g2), c.name(g)}))
            return rep;
        }
  for (auto& a : objs)
    for (auto& b : objs)
      if (detail::has_prod(c, a, b) && !(c.tensor(c.id(a), c.id(b)) == c.id(*c.prod(a, b))) &&
          fail("tensor-identity", {c.obj_name(a), c.obj_name(b)}))
        return rep;
  for (auto& f : mors) {
    auto a = c.dom(f), b = c.cod(f);
    if (detail::has_prod(c, a, a) && detail::has_prod(c, b, b)) {
      ++rep.checked;
      if (!(c.compose(c.diag(b), f) == c.compose(c.tensor(f, f), c.diag(a))) &&
          fail("diag-natural", {c.name(f)}))
        return rep;
    }
    for (auto& y : objs) {
      if (!detail::has_prod(c, a, y) || !detail::has_prod(c, b, y)) continue;
      ++rep.checked;
      if (!(c.compose(c.proj1(b, y), c.tensor(f, c.id(y))) == c.compose(f, c.proj1(a, y))) &&
          fail("p-natural", {c.name(f), c.obj_name(y)}))
        return rep;
      if (!detail::has_prod(c, y, a) || !detail::has_prod(c, y, b)) continue;
      if (!(c.compose(c.proj2(y, b), c.tensor(c.id(y), f)) == c.compose(f, c.proj2(y, a))) &&
          fail("q-natural", {c.obj_name(y), c.name(f)}))
        return rep;
    }
  }
  for (auto& a : objs) {
    if (!detail::has_prod(c, a, a)) continue;
    ++rep.checked;
    auto d = c.diag(a);
    if (!(c.compose(c.proj1(a, a), d) == c.id(a)) && fail("triangle-p", {c.obj_name(a)}))
      return rep;
    if (!(c.compose(c.proj2(a, a), d) == c.id(a)) && fail("triangle-q", {c.obj_name(a)}))
      return rep;
  }
  for (auto& x : objs)
    for (auto& y : objs) {
      if (!detail::has_prod(c, x, y)) continue;
      auto xy = *c.prod(x, y);
      if (detail::has_prod(c, xy, xy)) {
        ++rep.checked;
        auto pq = c.tensor(c.proj1(x, y), c.proj2(x, y));
        if (!(c.compose(pq, c.diag(xy)) == c.id(xy)) &&
            fail("pairing-projections", {c.obj_name(x), c.obj_name(y)}))
          return rep;
      }
      // associativity: X×(Y×Z) = (X×Y)×Z on the nose, with the projections
      for (auto& z : objs) {
        if (!detail::has_prod(c, y, z) || !detail::has_prod(c, xy, z) ||
            !detail::has_prod(c, x, *c.prod(y, z)) || !detail::has_prod(c, x, z))
          continue;
        auto yz = *c.prod(y, z);
        auto xyz = *c.prod(x, yz);
        if (!(xyz == *c.prod(xy, z)))
          throw StructureError("p-category: " + c.obj_name(x) + "×(" + c.obj_name(y) + "×" +
                               c.obj_name(z) + ") is not strictly associative");
        ++rep.checked;
        auto p_x = c.proj1(x, yz);
        if (!(c.compose(c.proj1(x, y), c.tensor(c.id(x), c.proj1(y, z))) == p_x) &&
            fail("assoc-p-left", {c.obj_name(x), c.obj_name(y), c.obj_name(z)}))
          return rep;
        if (!(c.compose(c.proj1(x, z), c.tensor(c.id(x), c.proj2(y, z))) == p_x) &&
            fail("assoc-p-right", {c.obj_name(x), c.obj_name(y), c.obj_name(z)}))
          return rep;
        auto q_z = c.proj2(xy, z);
        if (!(c.compose(c.proj2(x, z), c.tensor(c.proj1(x, y), c.id(z))) == q_z) &&
            fail("assoc-q-left", {c.obj_name(x), c.obj_name(y), c.obj_name(z)}))
          return rep;
        if (!(c.compose(c.proj2(y, z), c.tensor(c.proj2(x, y), c.id(z))) == q_z) &&
            fail("assoc-q-right", {c.obj_name(x), c.obj_name(y), c.obj_name(z)}))
          return rep;
        // α = (1×q)·((1×p)×q)·Δ is the identity under strictness
        auto xy_yz = c.prod(xy, yz);
        if (xy_yz && detail::has_prod(c, xyz, xyz)) {
          auto mid = c.tensor(c.tensor(c.id(x), c.proj1(y, z)), c.proj2(x, yz));
          auto alpha = c.compose(c.tensor(c.id(xy), c.proj2(y, z)), c.compose(mid, c.diag(xyz)));
          if (!(alpha == c.id(xyz)) &&
              fail("associator", {c.obj_name(x), c.obj_name(y), c.obj_name(z)}, c.name(alpha)))
            return rep;
        }
      }
    }
  // τ = (q×p)·Δ is natural: (g×f)·τ = τ·(f×g)
  for (auto& f : mors)
    for (auto& g : mors) {
      auto x = c.dom(f), y = c.dom(g), x2 = c.cod(f), y2 = c.cod(g);
      if (!detail::has_prod(c, x, y) || !detail::has_prod(c, y, x) ||
          !detail::has_prod(c, x2, y2) || !detail::has_prod(c, y2, x2))
        continue;
      auto xy = *c.prod(x, y), xy2 = *c.prod(x2, y2);
      if (!detail::has_prod(c, xy, xy) || !detail::has_prod(c, xy2, xy2)) continue;
      ++rep.checked;
      auto tau = c.compose(c.tensor(c.proj2(x, y), c.proj1(x, y)), c.diag(xy));
      auto tau2 = c.compose(c.tensor(c.proj2(x2, y2), c.proj1(x2, y2)), c.diag(xy2));
      if (!(c.compose(c.tensor(g, f), tau) == c.compose(tau2, c.tensor(f, g))) &&
          fail("symmetry-natural", {c.name(f), c.name(g)}))
        return rep;
    }
  // dom f = p(1×f)Δ is the stored restriction
  for (auto& f : mors) {
    if (!detail::has_prod(c, c.dom(f), c.dom(f)) || !detail::has_prod(c, c.dom(f), c.cod(f)))
      continue;
    ++rep.checked;
    auto d = detail::pairing_restriction(c, f);
    if (!(d == c.rst(f)) && fail("derived-restriction", {c.name(f)}, c.name(d)))
      return rep;
  }
  // one-element object: p : X×T -> X inverse to (1×t)Δ
  if (auto t = c.terminal())
    for (auto& x : objs) {
      if (!detail::has_prod(c, x, *t) || !detail::has_prod(c, x, x)) continue;
      ++rep.checked;
      auto p = c.proj1(x, *t);
      auto inv = c.compose(c.tensor(c.id(x), c.to_terminal(x)), c.diag(x));
      if ((!(c.compose(p, inv) == c.id(x)) || !(c.compose(inv, p) == c.id(*c.prod(x, *t)))) &&
          fail("one-element", {c.obj_name(x)}))
        return rep;
    }
  return rep;
}

// both directions of "p-category iff binary restriction products" on one instance
struct ProductEquivalence {
  LawReport restriction_products, p_category;
  bool agree() const { return restriction_products.passed() == p_category.passed(); }
};

template <class C>
  requires RestrictionCategory<C> && HasRestrictionProducts<C>
ProductEquivalence check_product_equivalence(const C& c, const CheckOptions& o = {}) {
  return {check_restriction_products(c, o), check_p_category(c, o)};
}

// hom(A, T) ≅ RId(A) by f ↦ r̄f and e ↦ t_A·e
struct RidTable {
  std::string object;
  std::size_t maps = 0, idempotents = 0;
  std::vector<std::pair<std::string, std::string>> pairs;  // (map, idempotent)
  bool bijective = false;
};

struct TerminalCheck {
  LawReport report;
  std::vector<RidTable> tables;
};

template <class C>
  requires RestrictionCategory<C>
TerminalCheck restriction_terminal_check(const C& c, const ObjOf<C>& t,
                                         const std::function<MorOf<C>(const ObjOf<C>&)>& bang,
                                         const CheckOptions& o = {}) {
  TerminalCheck out;
  LawReport& rep = out.report;
  auto fail = [&](std::string tag, std::vector<std::string> w, std::string d = {}) {
    return rep.fail(o, std::move(tag), std::move(w), std::move(d));
  };
  if (!(bang(t) == c.id(t))) fail("terminal-identity", {c.name(bang(t))});
  for (auto&& a : c.objects()) {
    ++rep.checked;
    auto ta = bang(a);
    if (!(c.dom(ta) == a) || !(c.cod(ta) == t))
      throw ShapeMismatch("restriction_terminal_check: t_" + c.obj_name(a) + " has the wrong type");
    if (!is_total(c, ta)) fail("terminal-total", {c.name(ta)});
    RidTable tab;
    tab.object = c.obj_name(a);
    auto maps = hom_of(c, a, t);
    auto ids = restriction_idempotents(c, a);
    tab.maps = maps.size();
    tab.idempotents = ids.size();
    bool ok = maps.size() == ids.size();
    for (auto& f : maps) {
      auto e = c.rst(f);
      tab.pairs.emplace_back(c.name(f), c.name(e));
      if (!(c.compose(ta, e) == f)) ok = false;
    }
    for (auto& e : ids)
      if (!(c.rst(c.compose(ta, e)) == e)) ok = false;
    tab.bijective = ok;
    if (!ok)
      fail("rid-bijection", {c.obj_name(a)},
           std::to_string(tab.maps) + " maps, " + std::to_string(tab.idempotents) + " idempotents");
    out.tables.push_back(std::move(tab));
    if (rep.stop(o)) return out;
  }
  for (auto&& a : c.objects())
    for (auto&& b : c.objects())
      for (auto&& f : c.hom(a, b)) {
        ++rep.checked;
        if (!(c.compose(bang(b), f) == c.compose(bang(a), c.rst(f))) &&
            fail("terminal-lax-natural", {c.name(f)}))
          return out;
      }
  if constexpr (HasRestrictionProducts<C>) {
    for (auto&& x : c.objects()) {
      if (!c.prod(x, t) || !c.prod(x, x)) continue;
      ++rep.checked;
      auto p = c.proj1(x, t);
      auto inv = c.compose(c.tensor(c.id(x), bang(x)), c.diag(x));
      if ((!(c.compose(p, inv) == c.id(x)) || !(c.compose(inv, p) == c.id(*c.prod(x, t)))) &&
          fail("one-element", {c.obj_name(x)}))
        return out;
    }
  }
  return out;
}

// the chosen restriction terminal of c
template <class C>
  requires RestrictionCategory<C> && HasRestrictionProducts<C>
TerminalCheck restriction_terminal_check(const C& c, const CheckOptions& o = {}) {
  auto t = c.terminal();
  if (!t) throw StructureError("restriction_terminal_check: no terminal object");
  return restriction_terminal_check<C>(
      c, *t, [&](const ObjOf<C>& a) { return c.to_terminal(a); }, o);
}

// ---- products in the ordinary sense -------------------------------------

template <Category C>
struct OrdinaryProduct {
  ObjOf<C> obj;
  MorOf<C> p1, p2;
  std::size_t cones = 1;           // product cones found over all objects
  std::size_t witness_objects = 1;  // objects carrying at least one
};

// (P, p1, p2) is a product of its codomains: every span factors uniquely
template <Category C>
bool is_ordinary_product(const C& c, const MorOf<C>& p1, const MorOf<C>& p2) {
  auto p = c.dom(p1);
  for (auto&& q : c.objects()) {
    auto fs = hom_of(c, q, c.cod(p1));
    auto gs = hom_of(c, q, c.cod(p2));
    auto hs = hom_of(c, q, p);
    for (auto& f : fs)
      for (auto& g : gs) {
        int n = 0;
        for (auto& h : hs)
          if (c.compose(p1, h) == f && c.compose(p2, h) == g && ++n > 1) return false;
        if (n != 1) return false;
      }
  }
  return true;
}

template <Category C>
std::optional<OrdinaryProduct<C>> find_ordinary_product(const C& c, const ObjOf<C>& a,
                                                        const ObjOf<C>& b) {
  std::optional<OrdinaryProduct<C>> first;
  std::size_t cones = 0, objects = 0;
  for (auto&& p : c.objects()) {
    bool any = false;
    for (auto&& p1 : c.hom(p, a))
      for (auto&& p2 : c.hom(p, b))
        if (is_ordinary_product(c, p1, p2)) {
          ++cones;
          any = true;
          if (!first) first = OrdinaryProduct<C>{p, p1, p2};
        }
    objects += any;
  }
  if (first) {
    first->cones = cones;
    first->witness_objects = objects;
  }
  return first;
}

// the unique h with p1·h = f and p2·h = g
template <Category C>
MorOf<C> ordinary_pairing(const C& c, const OrdinaryProduct<C>& pr, const MorOf<C>& f,
                          const MorOf<C>& g) {
  for (auto&& h : c.hom(c.dom(f), pr.obj))
    if (c.compose(pr.p1, h) == f && c.compose(pr.p2, h) == g) return h;
  throw NoProducts("no pairing of " + c.name(f) + " and " + c.name(g));
}

// ---- the lattice of restriction idempotents -----------------------------

template <Category C>
struct IdempotentLattice {
  ObjOf<C> obj;
  std::vector<MorOf<C>> elems;
  std::vector<std::vector<std::size_t>> meet, join;
  std::size_t bottom = 0, top = 0;
  LawReport laws;

  std::size_t index(const MorOf<C>& e) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == e) return i;
    throw InvalidWitness("not a restriction idempotent of this object");
  }
};

namespace detail {

// r̄⟨e, e'⟩ and r̄(!_A), from built-in or searched ordinary products
template <class C>
struct JoinOps {
  std::function<MorOf<C>(const MorOf<C>&, const MorOf<C>&)> join;
  std::function<MorOf<C>(const ObjOf<C>&)> bottom;
};

template <class C>
JoinOps<C> join_ops(const C& c) {
  if constexpr (HasOrdinaryProducts<C>) {
    if (!c.ord_terminal()) throw NoProducts("no terminal object");
    return {[&c](const MorOf<C>& e, const MorOf<C>& d) { return c.rst(c.ord_pair(e, d)); },
            [&c](const ObjOf<C>& a) { return c.rst(c.ord_bang(a)); }};
  } else {
    auto t = find_terminal(c);
    if (!t) throw NoProducts("no terminal object in scope");
    auto term = *t;
    return {[&c](const MorOf<C>& e, const MorOf<C>& d) {
              auto a = c.dom(e);
              auto pr = find_ordinary_product(c, a, a);
              if (!pr) throw NoProducts("no product " + c.obj_name(a) + "×" + c.obj_name(a));
              return c.rst(ordinary_pairing(c, *pr, e, d));
            },
            [&c, term](const ObjOf<C>& a) {
              auto h = hom_of(c, a, term);
              return c.rst(h.front());
            }};
  }
}

}  // namespace detail

// meet e·e', join r̄⟨e,e'⟩, bottom r̄(!_A); lattice and distributive laws checked
template <class C>
  requires RestrictionCategory<C>
IdempotentLattice<C> idempotent_lattice(const C& c, const ObjOf<C>& a, const CheckOptions& o = {}) {
  auto ops = detail::join_ops(c);
  IdempotentLattice<C> lat;
  lat.obj = a;
  lat.elems = restriction_idempotents(c, a);
  const std::size_t n = lat.elems.size();
  LawReport& rep = lat.laws;
  auto nm = [&](std::size_t i) { return c.name(lat.elems[i]); };
  lat.meet.assign(n, std::vector<std::size_t>(n));
  lat.join.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      lat.meet[i][j] = lat.index(c.compose(lat.elems[i], lat.elems[j]));
      lat.join[i][j] = lat.index(ops.join(lat.elems[i], lat.elems[j]));
    }
  lat.bottom = lat.index(ops.bottom(a));
  lat.top = lat.index(c.id(a));
  auto le = [&](std::size_t i, std::size_t j) { return lat.meet[i][j] == i; };
  for (std::size_t i = 0; i < n; ++i) {
    ++rep.checked;
    if (!le(lat.bottom, i) && rep.fail(o, "bottom-least", {nm(i)})) return lat;
    if (!le(i, lat.top) && rep.fail(o, "top-greatest", {nm(i)})) return lat;
    if (lat.join[i][i] != i && rep.fail(o, "join-idempotent", {nm(i)})) return lat;
    if (lat.meet[i][lat.bottom] != lat.bottom && rep.fail(o, "meet-bottom", {nm(i)})) return lat;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ++rep.checked;
      auto u = lat.join[i][j], m = lat.meet[i][j];
      if (m != lat.meet[j][i] && rep.fail(o, "meet-commutative", {nm(i), nm(j)})) return lat;
      if ((!le(i, u) || !le(j, u)) && rep.fail(o, "join-upper-bound", {nm(i), nm(j)})) return lat;
      for (std::size_t k = 0; k < n; ++k) {
        if (le(i, k) && le(j, k) && !le(u, k) &&
            rep.fail(o, "join-least", {nm(i), nm(j), nm(k)}))
          return lat;
        if (le(k, i) && le(k, j) && !le(k, m) &&
            rep.fail(o, "meet-greatest", {nm(i), nm(j), nm(k)}))
          return lat;
        ++rep.checked;
        if (lat.meet[i][lat.join[j][k]] != lat.join[lat.meet[i][j]][lat.meet[i][k]] &&
            rep.fail(o, "distributive", {nm(i), nm(j), nm(k)}))
          return lat;
        if (lat.join[i][lat.meet[j][k]] != lat.meet[lat.join[i][j]][lat.join[i][k]] &&
            rep.fail(o, "distributive-dual", {nm(i), nm(j), nm(k)}))
          return lat;
      }
    }
  return lat;
}

// RId(f) : RId(B) -> RId(A), e ↦ r̄(e·f), against the lattices of A and B
struct SubstitutionCheck {
  bool meets = true, joins = true, bottom = true, top = true;
};

template <class C>
  requires RestrictionCategory<C>
SubstitutionCheck check_substitution(const C& c, const MorOf<C>& f, const IdempotentLattice<C>& la,
                                     const IdempotentLattice<C>& lb) {
  if (!(la.obj == c.dom(f)) || !(lb.obj == c.cod(f)))
    throw ShapeMismatch("check_substitution: lattices do not match " + c.name(f));
  auto sub = [&](std::size_t i) { return la.index(c.rst(c.compose(lb.elems[i], f))); };
  SubstitutionCheck out;
  const std::size_t n = lb.elems.size();
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = sub(i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (img[lb.meet[i][j]] != la.meet[img[i]][img[j]]) out.meets = false;
      if (img[lb.join[i][j]] != la.join[img[i]][img[j]]) out.joins = false;
    }
  out.bottom = img[lb.bottom] == la.bottom;
  out.top = img[lb.top] == la.top;
  return out;
}

// ---- triviality guard ---------------------------------------------------

// A terminal object whose maps t_A are total, or products in the ordinary
// sense with total projections and r̄(f×g) = r̄f×r̄g, force every map to be
// total.  premise_* say whether each hypothesis holds on the instance.
struct TrivialityGuard {
  bool premise_terminal = false, premise_products = false;
  LawReport report;
};

template <class C>
  requires RestrictionCategory<C>
TrivialityGuard triviality_guard(const C& c, const CheckOptions& o = {}) {
  TrivialityGuard g;
  auto mors = all_morphisms(c);
  if (auto t = find_terminal(c)) {
    g.premise_terminal = true;
    for (auto&& a : c.objects())
      if (!is_total(c, hom_of(c, a, *t).front())) g.premise_terminal = false;
  }
  if constexpr (HasRestrictionProducts<C>) {
    bool ok = true, any = false;
    for (auto&& a : c.objects())
      for (auto&& b : c.objects()) {
        auto p = c.prod(a, b);
        if (!p || !in_scope(c, *p)) continue;
        any = true;
        auto p1 = c.proj1(a, b), p2 = c.proj2(a, b);
        if (!is_total(c, p1) || !is_total(c, p2) || !is_ordinary_product(c, p1, p2)) ok = false;
      }
    for (auto& f : mors)
      for (auto& h : mors)
        if (c.prod(c.dom(f), c.dom(h)) && c.prod(c.cod(f), c.cod(h)) &&
            !(c.rst(c.tensor(f, h)) == c.tensor(c.rst(f), c.rst(h))))
          ok = false;
    g.premise_products = ok && any;
  }
  if (!g.premise_terminal && !g.premise_products) return g;
  for (auto& f : mors) {
    ++g.report.checked;
    if (g.premise_products && !g.premise_terminal) {
      auto a = c.dom(f);
      if (!c.prod(a, a) || !in_scope(c, *c.prod(a, a))) continue;
    }
    if (!is_total(c, f) && g.report.fail(o, "nontrivial-restriction", {c.name(f)})) return g;
  }
  return g;
}

}  // namespace rcat
