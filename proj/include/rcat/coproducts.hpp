#pragma once

#include <set>

#include "rcat/concepts.hpp"
#include "rcat/errors.hpp"
#include "rcat/report.hpp"
#include "rcat/restriction.hpp"

namespace rcat {

// Right-nested n-ary coproduct B1 + (B2 + (... + Bn)); the empty sum is the
// initial object and a single summand is itself.
template <HasCoproducts C>
struct NSum {
  std::vector<ObjOf<C>> parts;
  ObjOf<C> total;
  std::vector<MorOf<C>> inj;
};

template <HasCoproducts C>
std::optional<NSum<C>> nsum(const C& c, const std::vector<ObjOf<C>>& parts) {
  if (parts.empty()) {
    auto z = c.initial();
    if (!z) return std::nullopt;
    return NSum<C>{parts, *z, {}};
  }
  if (parts.size() == 1) return NSum<C>{parts, parts[0], {c.id(parts[0])}};
  auto rest = nsum(c, std::vector<ObjOf<C>>(parts.begin() + 1, parts.end()));
  if (!rest) return std::nullopt;
  auto s = c.sum(parts[0], rest->total);
  if (!s) return std::nullopt;
  NSum<C> out{parts, *s, {c.inl(parts[0], rest->total)}};
  auto j = c.inr(parts[0], rest->total);
  for (auto& k : rest->inj) out.inj.push_back(c.compose(j, k));
  return out;
}

template <HasCoproducts C>
NSum<C> need_nsum(const C& c, const std::vector<ObjOf<C>>& parts) {
  auto s = nsum(c, parts);
  if (!s) {
    std::string names;
    for (auto& p : parts) names += (names.empty() ? "" : "+") + c.obj_name(p);
    throw StructureError("no chosen coproduct " + (names.empty() ? std::string("0") : names));
  }
  return *s;
}

template <HasCoproducts C>
std::vector<ObjOf<C>> copies(const ObjOf<C>& a, std::size_t n) {
  return std::vector<ObjOf<C>>(n, a);
}

namespace detail {
template <HasCoproducts C>
MorOf<C> ncopair_from(const C& c, const std::vector<MorOf<C>>& maps, std::size_t k) {
  if (k + 1 == maps.size()) return maps[k];
  return c.copair(maps[k], ncopair_from(c, maps, k + 1));
}
}  // namespace detail

// <f_1 | ... | f_n> : Σ parts -> target
template <HasCoproducts C>
MorOf<C> ncopair(const C& c, const NSum<C>& s, const std::vector<MorOf<C>>& maps,
                 const ObjOf<C>& target) {
  if (maps.size() != s.parts.size()) throw ShapeMismatch("ncopair: arity mismatch");
  if (maps.empty()) return c.from_initial(target);
  return detail::ncopair_from(c, maps, 0);
}

// Σ f_k : Σ dom -> Σ cod
template <HasCoproducts C>
MorOf<C> nplus(const C& c, const NSum<C>& src, const NSum<C>& tgt,
               const std::vector<MorOf<C>>& maps) {
  if (maps.size() != src.parts.size() || maps.size() != tgt.parts.size())
    throw ShapeMismatch("nplus: arity mismatch");
  std::vector<MorOf<C>> legs;
  for (std::size_t k = 0; k < maps.size(); ++k) legs.push_back(c.compose(tgt.inj[k], maps[k]));
  return ncopair(c, src, legs, tgt.total);
}

// ∇ : A + ... + A -> A
template <HasCoproducts C>
MorOf<C> codiag(const C& c, const NSum<C>& s) {
  std::vector<MorOf<C>> ids;
  for (auto& p : s.parts) ids.push_back(c.id(p));
  return ncopair(c, s, ids, s.parts.empty() ? *c.initial() : s.parts[0]);
}

template <Category C>
struct ZeroWitness {
  ObjOf<C> zero;
};

template <Category C>
bool is_initial_in_scope(const C& c, const ObjOf<C>& z) {
  for (auto&& a : c.objects())
    if (std::ranges::distance(c.hom(z, a)) != 1) return false;
  return true;
}

template <Category C>
bool is_terminal_in_scope(const C& c, const ObjOf<C>& t) {
  for (auto&& a : c.objects())
    if (std::ranges::distance(c.hom(a, t)) != 1) return false;
  return true;
}

template <Category C>
std::optional<ObjOf<C>> find_initial(const C& c) {
  for (auto&& a : c.objects())
    if (is_initial_in_scope(c, a)) return a;
  return std::nullopt;
}

template <Category C>
std::optional<ObjOf<C>> find_terminal(const C& c) {
  for (auto&& a : c.objects())
    if (is_terminal_in_scope(c, a)) return a;
  return std::nullopt;
}

// the chosen initial object, when it is also terminal
template <HasCoproducts C>
std::optional<ZeroWitness<C>> find_zero(const C& c) {
  auto z = c.initial();
  if (!z || !is_initial_in_scope(c, *z) || !is_terminal_in_scope(c, *z)) return std::nullopt;
  return ZeroWitness<C>{*z};
}

template <HasCoproducts C>
ZeroWitness<C> need_zero(const C& c) {
  auto z = find_zero(c);
  if (!z) throw NoZero("no zero object");
  return *z;
}

template <Category C>
MorOf<C> to_zero(const C& c, const ZeroWitness<C>& zw, const ObjOf<C>& a) {
  for (auto&& t : c.hom(a, zw.zero)) return t;
  throw NoZero("no map " + c.obj_name(a) + " -> " + c.obj_name(zw.zero));
}

// 0_AB = z_B · t_A
template <HasCoproducts C>
MorOf<C> zero_map(const C& c, const ZeroWitness<C>& zw, const ObjOf<C>& a, const ObjOf<C>& b) {
  return c.compose(c.from_initial(b), to_zero(c, zw, a));
}

// i*_k = <0|...|1|...|0> : Σ parts -> parts[k]
template <HasCoproducts C>
MorOf<C> retraction(const C& c, const ZeroWitness<C>& zw, const NSum<C>& s, std::size_t k) {
  std::vector<MorOf<C>> legs;
  for (std::size_t l = 0; l < s.parts.size(); ++l)
    legs.push_back(l == k ? c.id(s.parts[l]) : zero_map(c, zw, s.parts[l], s.parts[k]));
  return ncopair(c, s, legs, s.parts[k]);
}

template <HasCoproducts C>
LawReport check_restriction_coproducts(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  auto objs = objects_of(c);
  for (auto& a : objs)
    for (auto& b : objs) {
      if (!c.sum(a, b)) continue;
      rep.checked += 2;
      if (!is_total(c, c.inl(a, b)) &&
          rep.fail(o, "injection-total", {c.name(c.inl(a, b)), c.obj_name(a), c.obj_name(b)}))
        return rep;
      if (!is_total(c, c.inr(a, b)) &&
          rep.fail(o, "injection-total", {c.name(c.inr(a, b)), c.obj_name(a), c.obj_name(b)}))
        return rep;
    }
  if (!c.initial()) {
    rep.fail(o, "no-initial", {});
    return rep;
  }
  for (auto& a : objs) {
    ++rep.checked;
    if (!is_total(c, c.from_initial(a)) &&
        rep.fail(o, "initial-total", {c.name(c.from_initial(a))}))
      return rep;
    if (c.sum(a, a)) {
      auto nab = c.copair(c.id(a), c.id(a));
      if (!is_total(c, nab) && rep.fail(o, "codiagonal-total", {c.name(nab)})) return rep;
    }
  }
  for (auto& a : objs)
    for (auto& b : objs) {
      if (!c.sum(a, b)) continue;
      NSum<C> src = need_nsum(c, {a, b});
      for (auto& a2 : objs)
        for (auto& b2 : objs) {
          if (!c.sum(a2, b2)) continue;
          NSum<C> tgt = need_nsum(c, {a2, b2});
          for (auto&& f : c.hom(a, a2))
            for (auto&& g : c.hom(b, b2)) {
              ++rep.checked;
              try {
                auto lhs = c.rst(nplus(c, src, tgt, {f, g}));
                auto rhs = nplus(c, src, src, {c.rst(f), c.rst(g)});
                if (!(lhs == rhs) && rep.fail(o, "plus-restriction", {c.name(f), c.name(g)}))
                  return rep;
              } catch (const StructureError& e) {
                if (rep.fail(o, "copair-missing", {c.name(f), c.name(g)}, e.what())) return rep;
              }
            }
        }
    }
  // tables also get their universal property re-verified
  if constexpr (requires { c.coproducts(); c.cat(); }) {
    if (c.coproducts()) rep.merge(c.coproducts()->verify(c.cat(), o));
  }
  return rep;
}

// The three equivalent forms of "restriction zero", each checked on its own:
// (i) a zero object with r̄0_AA = 0_AA; (ii) 0 initial and terminal with every
// z_A restriction monic; (iii) a terminal 1 with every t_A a restriction retraction.
struct ZeroConditions {
  bool i = false, ii = false, iii = false;
};

template <HasCoproducts C>
ZeroConditions zero_conditions(const C& c) {
  ZeroConditions z;
  auto objs = objects_of(c);
  auto zw = find_zero(c);
  if (zw) {
    z.i = true;
    for (auto& a : objs) {
      auto zaa = zero_map(c, *zw, a, a);
      if (!(c.rst(zaa) == zaa)) z.i = false;
    }
    z.ii = true;
    for (auto& a : objs) {
      auto za = c.from_initial(a);
      auto r = to_zero(c, *zw, a);
      bool monic = is_total(c, za) && c.compose(r, za) == c.id(zw->zero) &&
                   c.compose(za, r) == c.rst(r);
      if (!monic) z.ii = false;
    }
  }
  if (auto t = find_terminal(c)) {
    z.iii = true;
    for (auto& a : objs) {
      auto ta = *c.hom(a, *t).begin();
      bool found = false;
      for (auto&& s : c.hom(*t, a))
        if (is_total(c, s) && are_restriction_inverse(c, ta, s)) found = true;
      if (!found) z.iii = false;
    }
  }
  return z;
}

template <HasCoproducts C>
LawReport check_restriction_zero(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  auto z = zero_conditions(c);
  rep.checked = 3;
  rep.note = std::string("i=") + (z.i ? "1" : "0") + " ii=" + (z.ii ? "1" : "0") +
             " iii=" + (z.iii ? "1" : "0");
  if (!z.i && rep.fail(o, "zero-i", {})) return rep;
  if (!z.ii && rep.fail(o, "zero-ii", {})) return rep;
  if (!z.iii && rep.fail(o, "zero-iii", {})) return rep;
  if (!(z.i == z.ii && z.ii == z.iii)) rep.fail(o, "zero-conditions-disagree", {});
  return rep;
}

// i* = <1|0> (component 0) or <0|1> (component 1) on A+B; asserts i*·i = 1 and
// i·i* = r̄(i*) = 1+0
template <HasCoproducts C>
MorOf<C> injection_retraction(const C& c, const ObjOf<C>& a, const ObjOf<C>& b, int component) {
  auto zw = find_zero(c);
  if (!zw) throw NoZero("injection_retraction needs a restriction zero");
  NSum<C> s = need_nsum(c, {a, b});
  auto r = retraction(c, *zw, s, static_cast<std::size_t>(component));
  auto i = s.inj[component];
  auto part = s.parts[component];
  auto one_plus_zero = component == 0
                           ? nplus(c, s, s, {c.id(a), zero_map(c, *zw, b, b)})
                           : nplus(c, s, s, {zero_map(c, *zw, a, a), c.id(b)});
  if (!(c.compose(r, i) == c.id(part)))
    throw AssertionFailure("i*·i != 1 for " + c.name(i));
  if (!(c.compose(i, r) == c.rst(r)) || !(c.rst(r) == one_plus_zero))
    throw AssertionFailure("i·i* != r̄(i*) = 1+0 for " + c.name(i));
  return r;
}

// brute-force search for a coproduct cocone of (a, b) inside the scope
template <Category C>
struct FoundCoproduct {
  ObjOf<C> sum;
  MorOf<C> inl, inr;
};

template <Category C>
bool is_coproduct_cocone(const C& c, const MorOf<C>& i, const MorOf<C>& j) {
  auto s = c.cod(i);
  for (auto&& d : c.objects()) {
    auto hs = hom_of(c, s, d);
    std::size_t na = std::ranges::distance(c.hom(c.dom(i), d));
    std::size_t nb = std::ranges::distance(c.hom(c.dom(j), d));
    if (hs.size() != na * nb) return false;
    std::set<std::pair<MorOf<C>, MorOf<C>>> seen;
    for (auto& h : hs)
      if (!seen.insert({c.compose(h, i), c.compose(h, j)}).second) return false;
  }
  return true;
}

template <Category C>
std::optional<FoundCoproduct<C>> find_coproduct(const C& c, const ObjOf<C>& a,
                                                const ObjOf<C>& b) {
  for (auto&& s : c.objects())
    for (auto&& i : c.hom(a, s))
      for (auto&& j : c.hom(b, s))
        if (is_coproduct_cocone(c, i, j)) return FoundCoproduct<C>{s, i, j};
  return std::nullopt;
}

}  // namespace rcat
