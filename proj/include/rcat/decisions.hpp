#pragma once

#include <algorithm>

#include "rcat/coproducts.hpp"

namespace rcat {

// h : C -> Σ_K C deciding f : C -> Σ_K B_κ
template <Category C>
struct Decision {
  MorOf<C> subject;
  std::vector<ObjOf<C>> parts;
  MorOf<C> h;
  bool unique = true;
  // false when Σ_K(ΣB) is not available, so D.2 could not be evaluated
  bool d2_checked = true;
  bool characterizations_agree = true;
  std::size_t candidates = 1;
};

namespace detail {

template <class C>
bool contains(const std::vector<MorOf<C>>& v, const MorOf<C>& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

template <class C>
bool same_set(const std::vector<MorOf<C>>& a, const std::vector<MorOf<C>>& b) {
  if (a.size() != b.size()) return false;
  for (auto& x : a)
    if (!contains<C>(b, x)) return false;
  return true;
}

// everything find_decision needs about f, computed once
template <class C>
struct DecisionFrame {
  NSum<C> sb, sc;
  std::optional<NSum<C>> ss;
  MorOf<C> rf;
  MorOf<C> nabla;
  std::optional<MorOf<C>> sum_f, rhs;
  MorOf<C> domains;  // <r̄(i*_κ f)>_κ : Σ_K C -> C
};

template <class C>
DecisionFrame<C> decision_frame(const C& c, const ZeroWitness<C>& zw, const MorOf<C>& f,
                                const std::vector<ObjOf<C>>& parts) {
  auto sb = need_nsum(c, parts);
  if (!(sb.total == c.cod(f)))
    throw ShapeMismatch("decision: " + c.name(f) + " does not land in the given coproduct");
  auto a = c.dom(f);
  auto sc = need_nsum(c, copies<C>(a, parts.size()));
  auto ss = nsum(c, copies<C>(sb.total, parts.size()));
  std::vector<MorOf<C>> doms;
  for (std::size_t k = 0; k < parts.size(); ++k)
    doms.push_back(c.rst(c.compose(retraction(c, zw, sb, k), f)));
  DecisionFrame<C> fr{sb, sc, ss, c.rst(f), codiag(c, sc), std::nullopt, std::nullopt,
                      ncopair(c, sc, doms, a)};
  if (ss) {
    fr.sum_f = nplus(c, sc, *ss, std::vector<MorOf<C>>(parts.size(), f));
    fr.rhs = c.compose(nplus(c, sb, *ss, sb.inj), f);
  }
  return fr;
}

template <class C>
bool d1(const C& c, const DecisionFrame<C>& fr, const MorOf<C>& h) {
  return c.compose(fr.nabla, h) == fr.rf;
}

template <class C>
bool d2(const C& c, const DecisionFrame<C>& fr, const MorOf<C>& h) {
  return c.compose(*fr.sum_f, h) == *fr.rhs;
}

template <class C>
bool inverse_form(const C& c, const DecisionFrame<C>& fr, const MorOf<C>& h) {
  return c.rst(h) == fr.rf && are_restriction_inverse(c, fr.domains, h);
}

}  // namespace detail

// Exhaustive search of hom(C, Σ_K C) under both characterizations: D.1+D.2,
// and "restriction inverse to <r̄(i*_κ f)>_κ with r̄h = r̄f".  K = ∅ gives z*.
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
std::optional<Decision<C>> find_decision(const C& c, const MorOf<C>& f,
                                         const std::vector<ObjOf<C>>& parts) {
  auto zw = need_zero(c);
  if (parts.empty()) {
    auto z = c.initial();
    if (!(c.cod(f) == *z)) throw ShapeMismatch("decision: " + c.name(f) + " does not land in 0");
    return Decision<C>{f, parts, to_zero(c, zw, c.dom(f))};
  }
  auto fr = detail::decision_frame(c, zw, f, parts);
  std::vector<MorOf<C>> by_axioms, by_inverse;
  for (auto&& h : c.hom(c.dom(f), fr.sc.total)) {
    if (fr.ss && detail::d1(c, fr, h) && detail::d2(c, fr, h)) by_axioms.push_back(h);
    if (detail::inverse_form(c, fr, h)) by_inverse.push_back(h);
  }
  if (by_axioms.empty() && by_inverse.empty()) return std::nullopt;
  const auto& chosen = fr.ss && !by_axioms.empty() ? by_axioms : by_inverse;
  bool agree = !fr.ss || detail::same_set<C>(by_axioms, by_inverse);
  return Decision<C>{f, parts, chosen.front(), chosen.size() == 1, fr.ss.has_value(), agree,
                     chosen.size()};
}

// true when h satisfies D.1 (and D.2 when Σ_K(ΣB) exists) and the
// restriction-inverse form for f
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
bool is_decision_of(const C& c, const MorOf<C>& h, const MorOf<C>& f,
                    const std::vector<ObjOf<C>>& parts) {
  auto zw = need_zero(c);
  if (parts.empty()) return h == to_zero(c, zw, c.dom(f));
  auto fr = detail::decision_frame(c, zw, f, parts);
  if (!(c.dom(h) == c.dom(f)) || !(c.cod(h) == fr.sc.total)) return false;
  if (!detail::d1(c, fr, h) || !detail::inverse_form(c, fr, h)) return false;
  return !fr.ss || detail::d2(c, fr, h);
}

// h : A -> Σ_K A is a decision iff it is its own decision
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
bool is_decision(const C& c, const MorOf<C>& h, std::size_t arity) {
  return is_decision_of(c, h, h, copies<C>(c.dom(h), arity));
}

// all decisions A -> A+A
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
std::vector<MorOf<C>> binary_decisions(const C& c, const ObjOf<C>& a) {
  std::vector<MorOf<C>> out;
  auto s = c.sum(a, a);
  if (!s) return out;
  auto zw = need_zero(c);
  auto sa = need_nsum(c, {a, a});
  for (auto&& h : c.hom(a, *s)) {
    std::vector<MorOf<C>> doms{c.rst(c.compose(retraction(c, zw, sa, 0), h)),
                               c.rst(c.compose(retraction(c, zw, sa, 1), h))};
    if (are_restriction_inverse(c, h, ncopair(c, sa, doms, a))) out.push_back(h);
  }
  return out;
}

// The n-ary decision from binary ones: split Σ_K B as B_1 + Σ_{κ>1} B_κ,
// decide that binary map, decide j*f recursively, return (1+h')·h_1.
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
MorOf<C> decision_from_binary(const C& c, const MorOf<C>& f, const std::vector<ObjOf<C>>& parts,
                              std::size_t step = 0) {
  auto zw = need_zero(c);
  auto a = c.dom(f);
  if (parts.empty()) return to_zero(c, zw, a);
  if (parts.size() == 1) return c.rst(f);
  if (parts.size() == 2) {
    auto d = find_decision(c, f, parts);
    if (!d)
      throw MissingBinaryDecision("step " + std::to_string(step) + ": no decision for " +
                                  c.name(f));
    return d->h;
  }
  std::vector<ObjOf<C>> rest(parts.begin() + 1, parts.end());
  auto sr = need_nsum(c, rest);
  auto bin = need_nsum(c, {parts[0], sr.total});
  auto d = find_decision(c, f, {parts[0], sr.total});
  if (!d)
    throw MissingBinaryDecision("step " + std::to_string(step) + ": no decision for " +
                                c.name(f) + " against " + c.obj_name(parts[0]) + "+" +
                                c.obj_name(sr.total));
  auto jf = c.compose(retraction(c, zw, bin, 1), f);
  auto hr = decision_from_binary(c, jf, rest, step + 1);
  auto cc = need_nsum(c, {a, a});
  auto tail = need_nsum(c, {a, c.cod(hr)});
  return c.compose(nplus(c, cc, tail, {c.id(a), hr}), d->h);
}

// (Σf)·h·g for a decision h : A -> Σ_K A and a restriction-inverse pair
// f : A -> B, g : B -> A
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
MorOf<C> conjugate_decision(const C& c, const MorOf<C>& h, const MorOf<C>& f, const MorOf<C>& g,
                            std::size_t arity) {
  auto sa = need_nsum(c, copies<C>(c.dom(f), arity));
  auto sb = need_nsum(c, copies<C>(c.cod(f), arity));
  return c.compose(nplus(c, sa, sb, std::vector<MorOf<C>>(arity, f)), c.compose(h, g));
}

// 1+τ+1 : (B+C)+(B'+C') -> (B+B')+(C+C')
template <HasCoproducts C>
MorOf<C> middle_swap(const C& c, const ObjOf<C>& b, const ObjOf<C>& cc, const ObjOf<C>& b2,
                     const ObjOf<C>& c2) {
  auto l = need_nsum(c, {b, cc}), r = need_nsum(c, {b2, c2});
  auto src = need_nsum(c, {l.total, r.total});
  auto bb = need_nsum(c, {b, b2}), ccs = need_nsum(c, {cc, c2});
  auto tgt = need_nsum(c, {bb.total, ccs.total});
  auto into = [&](std::size_t side, std::size_t k) {
    return c.compose(tgt.inj[side], (side == 0 ? bb : ccs).inj[k]);
  };
  auto left = ncopair(c, l, {into(0, 0), into(1, 0)}, tgt.total);
  auto right = ncopair(c, r, {into(0, 1), into(1, 1)}, tgt.total);
  return ncopair(c, src, {left, right}, tgt.total);
}

// σ·(Σ_λ k_λ) with k_λ = (Σ_κ i*_λ)·h·i_λ, for h : Σ_Λ A_λ -> Σ_K Σ_Λ A_λ;
// returns the k_λ and whether the recomposite equals h
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
std::pair<std::vector<MorOf<C>>, bool> decision_on_sum(const C& c, const MorOf<C>& h,
                                                       const std::vector<ObjOf<C>>& summands,
                                                       std::size_t arity) {
  auto zw = need_zero(c);
  auto sa = need_nsum(c, summands);
  auto outer = need_nsum(c, copies<C>(sa.total, arity));
  std::vector<MorOf<C>> ks, legs;
  for (std::size_t l = 0; l < summands.size(); ++l) {
    auto inner = need_nsum(c, copies<C>(summands[l], arity));
    auto proj = nplus(c, outer, inner,
                      std::vector<MorOf<C>>(arity, retraction(c, zw, sa, l)));
    ks.push_back(c.compose(proj, c.compose(h, sa.inj[l])));
    // σ restricted to the λ block: the κ-th copy of A_λ goes to i_κ·i_λ
    std::vector<MorOf<C>> to_outer;
    for (std::size_t k = 0; k < arity; ++k)
      to_outer.push_back(c.compose(outer.inj[k], sa.inj[l]));
    legs.push_back(c.compose(ncopair(c, inner, to_outer, outer.total), ks.back()));
  }
  auto recomposed = ncopair(c, sa, legs, outer.total);
  return {ks, recomposed == h};
}

}  // namespace rcat
