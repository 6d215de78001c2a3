#pragma once

#include "rcat/decisions.hpp"
#include "rcat/fincat.hpp"
#include "rcat/fin_view.hpp"

namespace rcat {

template <Category C>
struct ExtensiveVerdict {
  bool extensive = true;
  // a decision h : B -> B+B for which hf has no decision
  std::optional<MorOf<C>> witness;
  // false when A+A is outside the table, so the verdict is vacuous
  bool determined = true;
};

// f : A -> B is extensive when every decision h : B -> B+B makes hf decidable.
// When A+A is outside a truncated table the question cannot be posed and f
// counts as extensive.
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
ExtensiveVerdict<C> is_extensive_map(const C& c, const MorOf<C>& f) {
  auto a = c.dom(f), b = c.cod(f);
  auto aa = c.sum(a, a);
  if (!aa || !in_scope(c, *aa)) return {true, std::nullopt, false};
  for (auto& h : binary_decisions(c, b)) {
    auto hf = c.compose(h, f);
    if (!find_decision(c, hf, {b, b})) return {false, h};
  }
  return {true, std::nullopt};
}

// restriction coproducts + restriction zero + a decision for every f : C -> A+B
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
LawReport is_extensive_rcat(const C& c, const CheckOptions& o = {}) {
  LawReport rep = check_restriction_coproducts(c, o);
  if (rep.stop(o)) return rep;
  rep.merge(check_restriction_zero(c, o));
  if (rep.stop(o) || !find_zero(c)) return rep;
  auto objs = objects_of(c);
  for (auto& a : objs)
    for (auto& b : objs) {
      auto s = c.sum(a, b);
      if (!s || !in_scope(c, *s)) continue;
      for (auto& x : objs) {
        // decisions for maps out of x live in x+x; skip x when the table lacks it
        auto xx = c.sum(x, x);
        if (!xx || !in_scope(c, *xx)) continue;
        for (auto&& f : c.hom(x, *s)) {
          ++rep.checked;
          auto d = find_decision(c, f, {a, b});
          if (!d) {
            if (rep.fail(o, "no-decision", {c.name(f)}, c.obj_name(a) + "+" + c.obj_name(b)))
              return rep;
            continue;
          }
          if (!d->unique && rep.fail(o, "decision-not-unique", {c.name(f)})) return rep;
          if (!d->characterizations_agree &&
              rep.fail(o, "characterizations-disagree", {c.name(f)}))
            return rep;
        }
      }
    }
  return rep;
}

// Ex(X): the extensive maps of a finite instance, with its closure properties
// asserted on the table
struct ExtensiveSubcategory {
  FinRCat rcat;
  std::vector<MorId> to_parent;
  std::vector<MorId> non_extensive;
  // maps whose domain has no A+A in the table; they are kept unless closure
  // forces them out (g·f non-extensive with the other factor extensive)
  std::vector<MorId> undetermined;
  LawReport closure;
};

ExtensiveSubcategory extensive_subcategory(const FinRCat& x, const CoproductStructure& cp,
                                           const CheckOptions& o = {});

}  // namespace rcat
