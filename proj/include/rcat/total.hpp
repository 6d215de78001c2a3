#pragma once

#include "rcat/coproducts.hpp"
#include "rcat/views.hpp"

namespace rcat {

// K_r of a finite instance as dense tables, with inherited coproducts/products
inline Materialized<KrView<FinView>> split_idempotents(const FinView& x, std::size_t cap = 10000) {
  return materialize(KrView<FinView>(x), cap);
}

// every restriction idempotent d on A factors as m·r with r·m = 1, by search
template <RestrictionCategory C>
LawReport check_idempotents_split(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  auto objs = objects_of(c);
  for (auto& a : objs)
    for (auto& d : restriction_idempotents(c, a)) {
      ++rep.checked;
      bool found = false;
      for (auto& s : objs) {
        for (auto&& m : c.hom(s, a)) {
          for (auto&& r : c.hom(a, s))
            if (c.compose(m, r) == d && c.compose(r, m) == c.id(s)) {
              found = true;
              break;
            }
          if (found) break;
        }
        if (found) break;
      }
      if (!found && rep.fail(o, "idempotent-not-split", {c.name(d)})) return rep;
    }
  return rep;
}

// the wide subcategory of total maps
inline SubCategory total_subcategory(const FinRCat& x) {
  return subcategory(x.base(), [&](MorId f) { return x.rst(f) == x.base().id(x.base().dom(f)); });
}

// P with k : P -> X and a : P -> A forming a pullback of i : A -> S along f : X -> S
template <Category C>
struct PullbackSquare {
  ObjOf<C> obj;
  MorOf<C> k, a;
};

template <Category C>
bool is_pullback(const C& c, const MorOf<C>& f, const MorOf<C>& i, const MorOf<C>& k,
                 const MorOf<C>& a) {
  if (!(c.compose(f, k) == c.compose(i, a))) return false;
  auto p = c.dom(k);
  for (auto&& q : c.objects()) {
    auto us = hom_of(c, q, c.dom(f));
    auto vs = hom_of(c, q, c.dom(i));
    auto ws = hom_of(c, q, p);
    for (auto& u : us)
      for (auto& v : vs) {
        if (!(c.compose(f, u) == c.compose(i, v))) continue;
        int n = 0;
        for (auto& w : ws)
          if (c.compose(k, w) == u && c.compose(a, w) == v && ++n > 1) return false;
        if (n != 1) return false;
      }
  }
  return true;
}

template <Category C>
std::optional<PullbackSquare<C>> find_pullback(const C& c, const MorOf<C>& f, const MorOf<C>& i) {
  for (auto&& p : c.objects())
    for (auto&& k : c.hom(p, c.dom(f)))
      for (auto&& a : c.hom(p, c.dom(i)))
        if (is_pullback(c, f, i, k, a)) return PullbackSquare<C>{p, k, a};
  return std::nullopt;
}

// the chosen cocones are coproducts in c itself (re-verified by the universal
// property, e.g. after passing to Total or K_r)
template <class C>
  requires HasCoproducts<C>
LawReport check_chosen_coproducts(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  for (auto&& a : c.objects())
    for (auto&& b : c.objects()) {
      auto s = c.sum(a, b);
      if (!s || !in_scope(c, *s)) continue;
      ++rep.checked;
      if (!is_coproduct_cocone(c, c.inl(a, b), c.inr(a, b)) &&
          rep.fail(o, "not-a-coproduct", {c.obj_name(a), c.obj_name(b)}))
        return rep;
    }
  return rep;
}

// Extensivity of a category with chosen coproducts: for every f : X -> A+B the
// pullbacks k, l of both injections exist and (X; k, l) is a coproduct.  With
// require_all_coproducts every pair in scope must have its sum in scope.
template <class C>
  requires HasCoproducts<C>
LawReport check_extensive_category(const C& c, const CheckOptions& o = {},
                                   bool require_all_coproducts = false) {
  LawReport rep;
  auto objs = objects_of(c);
  if (require_all_coproducts) {
    for (auto& a : objs)
      for (auto& b : objs) {
        ++rep.checked;
        auto s = c.sum(a, b);
        if ((!s || !in_scope(c, *s)) &&
            rep.fail(o, "missing-coproduct", {c.obj_name(a), c.obj_name(b)}))
          return rep;
      }
    if ((!c.initial() || !in_scope(c, *c.initial())) && rep.fail(o, "missing-initial", {}))
      return rep;
  }
  for (auto& a : objs)
    for (auto& b : objs) {
      auto s = c.sum(a, b);
      if (!s || !in_scope(c, *s)) continue;
      auto i = c.inl(a, b), j = c.inr(a, b);
      for (auto& x : objs)
        for (auto&& f : c.hom(x, *s)) {
          ++rep.checked;
          auto pa = find_pullback(c, f, i);
          if (!pa) {
            if (rep.fail(o, "no-pullback", {c.name(f), c.name(i)})) return rep;
            continue;
          }
          auto pb = find_pullback(c, f, j);
          if (!pb) {
            if (rep.fail(o, "no-pullback", {c.name(f), c.name(j)})) return rep;
            continue;
          }
          if (!is_coproduct_cocone(c, pa->k, pb->k) &&
              rep.fail(o, "pullbacks-not-coproduct", {c.name(f)},
                       c.name(pa->k) + " , " + c.name(pb->k)))
            return rep;
        }
    }
  return rep;
}

}  // namespace rcat
