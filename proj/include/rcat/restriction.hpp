#pragma once

#include <random>

#include "rcat/concepts.hpp"
#include "rcat/errors.hpp"
#include "rcat/report.hpp"

namespace rcat {

template <RestrictionCategory C>
bool is_total(const C& c, const MorOf<C>& f) {
  return c.rst(f) == c.id(c.dom(f));
}

template <RestrictionCategory C>
bool is_restriction_idempotent(const C& c, const MorOf<C>& e) {
  return c.dom(e) == c.cod(e) && c.rst(e) == e;
}

template <RestrictionCategory C>
bool are_restriction_inverse(const C& c, const MorOf<C>& f, const MorOf<C>& g) {
  return c.dom(g) == c.cod(f) && c.cod(g) == c.dom(f) && c.compose(g, f) == c.rst(f) &&
         c.compose(f, g) == c.rst(g);
}

// first g : cod f -> dom f in hom order with gf = r̄f and fg = r̄g
template <RestrictionCategory C>
std::optional<MorOf<C>> restriction_inverse(const C& c, const MorOf<C>& f) {
  for (auto&& g : c.hom(c.cod(f), c.dom(f)))
    if (are_restriction_inverse(c, f, g)) return g;
  return std::nullopt;
}

template <RestrictionCategory C>
bool leq(const C& c, const MorOf<C>& f, const MorOf<C>& g) {
  if (!(c.dom(f) == c.dom(g)) || !(c.cod(f) == c.cod(g)))
    throw NotParallel(c.name(f) + " and " + c.name(g) + " are not parallel");
  return f == c.compose(g, c.rst(f));
}

template <RestrictionCategory C>
std::vector<MorOf<C>> restriction_idempotents(const C& c, const ObjOf<C>& a) {
  std::vector<MorOf<C>> out;
  for (auto&& e : c.hom(a, a))
    if (c.rst(e) == e) out.push_back(e);
  return out;
}

namespace detail {

// evaluates each axiom on one instance; returns true when the caller should stop
template <RestrictionCategory C>
struct AxiomEval {
  const C& c;
  const CheckOptions& o;
  LawReport& rep;

  bool r0(const MorOf<C>& f) {
    auto r = c.rst(f);
    if (!(c.dom(r) == c.dom(f)) || !(c.cod(r) == c.dom(f)))
      return rep.fail(o, "restriction-shape", {c.name(f)});
    return false;
  }
  bool r1(const MorOf<C>& f) {
    ++rep.checked;
    if (!(c.compose(f, c.rst(f)) == f)) return rep.fail(o, "R.1", {c.name(f)});
    return false;
  }
  bool r23(const MorOf<C>& f, const MorOf<C>& g) {
    rep.checked += 2;
    auto rf = c.rst(f), rg = c.rst(g);
    if (!(c.compose(rf, rg) == c.compose(rg, rf)) && rep.fail(o, "R.2", {c.name(f), c.name(g)}))
      return true;
    if (!(c.rst(c.compose(g, rf)) == c.compose(rg, rf)) &&
        rep.fail(o, "R.3", {c.name(f), c.name(g)}))
      return true;
    return false;
  }
  bool r4(const MorOf<C>& f, const MorOf<C>& h) {
    ++rep.checked;
    if (!(c.compose(c.rst(h), f) == c.compose(f, c.rst(c.compose(h, f)))))
      return rep.fail(o, "R.4", {c.name(f), c.name(h)});
    return false;
  }
};

}  // namespace detail

// R.1 f·r̄f = f; R.2 r̄f·r̄g = r̄g·r̄f; R.3 r̄(g·r̄f) = r̄g·r̄f; R.4 r̄h·f = f·r̄(hf),
// quantified over the scope (exhaustively, or on opts.samples random instances)
template <RestrictionCategory C>
LawReport check_restriction_axioms(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  auto objs = objects_of(c);
  std::vector<std::vector<MorOf<C>>> outs;
  std::size_t total = 0;
  for (auto& a : objs) {
    outs.push_back(out_of(c, a));
    total += outs.back().size();
  }
  if (total > o.cap && !o.samples)
    return truncated(std::to_string(total) + " morphisms exceed cap " + std::to_string(o.cap));
  auto out_index = [&](const ObjOf<C>& b) -> const std::vector<MorOf<C>>* {
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (objs[i] == b) return &outs[i];
    return nullptr;
  };
  detail::AxiomEval<C> ev{c, o, rep};
  for (auto& fs : outs)
    for (auto& f : fs)
      if (ev.r0(f)) return rep;

  if (o.samples) {
    rep.sampled = true;
    std::mt19937_64 rng(o.seed);
    std::vector<std::size_t> nonempty;
    for (std::size_t i = 0; i < outs.size(); ++i)
      if (!outs[i].empty()) nonempty.push_back(i);
    if (nonempty.empty()) return rep;
    auto pick = [&](const std::vector<MorOf<C>>& v) -> const MorOf<C>& {
      return v[rng() % v.size()];
    };
    for (std::size_t s = 0; s < *o.samples; ++s) {
      const auto& fs = outs[nonempty[rng() % nonempty.size()]];
      const auto& f = pick(fs);
      const auto& g = pick(fs);
      if (ev.r1(f) || ev.r23(f, g)) return rep;
      if (auto* hs = out_index(c.cod(f)); hs && !hs->empty())
        if (ev.r4(f, pick(*hs))) return rep;
    }
    return rep;
  }
  // one axiom at a time, so the first witness is the first failure of the
  // lowest-numbered axiom
  for (auto& fs : outs)
    for (auto& f : fs)
      if (ev.r1(f)) return rep;
  for (auto& fs : outs)
    for (auto& f : fs)
      for (auto& g : fs)
        if (ev.r23(f, g)) return rep;
  for (auto& fs : outs)
    for (auto& f : fs)
      if (auto* hs = out_index(c.cod(f)))
        for (auto& h : *hs)
          if (ev.r4(f, h)) return rep;
  return rep;
}

// consequences of the axioms that are worth asserting directly
template <RestrictionCategory C>
LawReport check_derived_restriction_laws(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  for (auto&& a : c.objects())
    for (auto&& f : out_of(c, a)) {
      auto rf = c.rst(f);
      ++rep.checked;
      if (!(c.rst(rf) == rf) && rep.fail(o, "rst-idempotent", {c.name(f)})) return rep;
      if (!(c.compose(rf, rf) == rf) && rep.fail(o, "rst-self-compose", {c.name(f)})) return rep;
      for (auto&& b : c.objects())
        for (auto&& g : c.hom(c.cod(f), b)) {
          if (!(c.rst(c.compose(g, f)) == c.rst(c.compose(c.rst(g), f))) &&
              rep.fail(o, "rst-composite", {c.name(g), c.name(f)}))
            return rep;
        }
    }
  return rep;
}

template <Category C>
bool is_monic(const C& c, const MorOf<C>& f) {
  for (auto&& x : c.objects()) {
    auto us = hom_of(c, x, c.dom(f));
    for (std::size_t i = 0; i < us.size(); ++i)
      for (std::size_t j = i + 1; j < us.size(); ++j)
        if (c.compose(f, us[i]) == c.compose(f, us[j])) return false;
  }
  return true;
}

template <RestrictionCategory C>
LawReport check_monics_total(const C& c, const CheckOptions& o = {}) {
  LawReport rep;
  for (auto&& f : all_morphisms(c)) {
    ++rep.checked;
    if (is_monic(c, f) && !is_total(c, f) && rep.fail(o, "monic-not-total", {c.name(f)}))
      return rep;
  }
  return rep;
}

}  // namespace rcat
