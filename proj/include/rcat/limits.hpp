#pragma once

// Restriction limits: of a single arrow (a splitting of r̄f), of a finite
// diagram (through the limit of the restricted diagram S' in Total), and
// equalizers in Total via separable objects.

#include <functional>

#include "rcat/products.hpp"
#include "rcat/restriction.hpp"

namespace rcat {

// a splitting of the restriction idempotent e, from the category when it
// knows one, otherwise by search (identities split trivially)
template <class C>
  requires RestrictionCategory<C>
std::optional<Splitting<ObjOf<C>, MorOf<C>>> find_splitting(const C& c, const MorOf<C>& e) {
  using S = Splitting<ObjOf<C>, MorOf<C>>;
  auto a = c.dom(e);
  if (e == c.id(a)) return S{a, e, e};
  if constexpr (HasSplitting<C>) {
    return c.split(e);
  } else {
    for (auto&& s : c.objects())
      for (auto&& m : c.hom(s, a))
        for (auto&& r : c.hom(a, s))
          if (c.compose(m, r) == e && c.compose(r, m) == c.id(s)) return S{s, m, r};
    return std::nullopt;
  }
}

// A finite diagram: the free category on a DAG of nodes and arrows, with S
// assigning an object to each node and a map to each arrow.
template <Category C>
struct Diagram {
  struct Arrow {
    std::size_t from, to;
    MorOf<C> map;
  };
  std::vector<ObjOf<C>> nodes;
  std::vector<Arrow> arrows;
};

// shapes up to this size are checked against every lax cone
inline constexpr std::size_t kMaxLimitNodes = 4, kMaxLimitArrows = 6;

namespace detail {

template <class C>
void validate_diagram(const C& c, const Diagram<C>& d) {
  for (std::size_t k = 0; k < d.arrows.size(); ++k) {
    const auto& a = d.arrows[k];
    if (a.from >= d.nodes.size() || a.to >= d.nodes.size())
      throw ShapeMismatch("diagram arrow " + std::to_string(k) + " has no such node");
    if (!(c.dom(a.map) == d.nodes[a.from]) || !(c.cod(a.map) == d.nodes[a.to]))
      throw ShapeMismatch("diagram arrow " + std::to_string(k) + " (" + c.name(a.map) +
                          ") does not match its nodes");
  }
  // acyclic: repeatedly peel nodes without incoming arrows
  std::vector<std::size_t> indeg(d.nodes.size());
  for (auto& a : d.arrows) ++indeg[a.to];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < d.nodes.size(); ++v)
    if (!indeg[v]) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto& a : d.arrows)
      if (a.from == v && --indeg[a.to] == 0) ready.push_back(a.to);
  }
  if (seen != d.nodes.size()) throw ShapeMismatch("diagram shape has a cycle");
}

// S of every non-empty path out of node v
template <class C>
void paths_from(const C& c, const Diagram<C>& d, std::size_t v, const MorOf<C>& acc,
                std::vector<MorOf<C>>& out) {
  for (auto& a : d.arrows)
    if (a.from == v) {
      auto m = c.compose(a.map, acc);
      out.push_back(m);
      paths_from(c, d, a.to, m, out);
    }
}

// every family q_v : m -> S v passing the per-node filter and, on each arrow,
// the pairwise condition; callback returns false to stop
template <class C>
bool enumerate_families(const C& c, const Diagram<C>& d, const ObjOf<C>& m,
                        const std::function<bool(const MorOf<C>&)>& keep,
                        const std::function<bool(const MorOf<C>&, const MorOf<C>&,
                                                 const MorOf<C>&)>& arrow_ok,
                        const std::function<bool(const std::vector<MorOf<C>>&)>& visit) {
  std::vector<std::vector<MorOf<C>>> choices;
  for (auto& v : d.nodes) {
    std::vector<MorOf<C>> hs;
    for (auto&& h : c.hom(m, v))
      if (keep(h)) hs.push_back(h);
    choices.push_back(std::move(hs));
  }
  std::vector<MorOf<C>> cur;
  std::function<bool(std::size_t)> go = [&](std::size_t v) -> bool {
    if (v == d.nodes.size()) return visit(cur);
    for (auto& h : choices[v]) {
      cur.push_back(h);
      bool ok = true;
      for (auto& a : d.arrows) {
        auto hi = std::max(a.from, a.to);
        if (hi != v) continue;
        if (!arrow_ok(a.map, cur[a.from], cur[a.to])) {
          ok = false;
          break;
        }
      }
      if (ok && !go(v + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return go(0);
}

}  // namespace detail

namespace detail {
// q_D = Sf·q_C·r̄q_D, i.e. q_D ≤ Sf·q_C
template <class C>
bool lax_arrow(const C& c, const MorOf<C>& s, const MorOf<C>& qc, const MorOf<C>& qd) {
  return qd == c.compose(s, c.compose(qc, c.rst(qd)));
}
}  // namespace detail

// q_D = Sf·q_C·r̄q_D on every arrow
template <class C>
  requires RestrictionCategory<C>
bool is_lax_cone(const C& c, const Diagram<C>& d, const std::vector<MorOf<C>>& q) {
  for (auto& a : d.arrows)
    if (!detail::lax_arrow(c, a.map, q[a.from], q[a.to])) return false;
  return true;
}

// The restriction-limit universal property of (L, legs): for every object M
// and lax cone q from M there is exactly one f : M -> L with legs_C·f = q_C·e
// and r̄f = e, e the composite of the r̄q_C.  (For a non-empty diagram the
// second condition follows from the first since the legs are total.)
template <class C>
  requires RestrictionCategory<C>
LawReport check_restriction_limit(const C& c, const Diagram<C>& d, const ObjOf<C>& l,
                                  const std::vector<MorOf<C>>& legs, const CheckOptions& o = {}) {
  LawReport rep;
  detail::validate_diagram(c, d);
  if (legs.size() != d.nodes.size()) throw ShapeMismatch("one leg per node expected");
  for (std::size_t v = 0; v < legs.size(); ++v)
    if (!is_total(c, legs[v]) && rep.fail(o, "leg-not-total", {c.name(legs[v])})) return rep;
  for (auto& a : d.arrows)
    if (!(c.compose(a.map, legs[a.from]) == legs[a.to]) &&
        rep.fail(o, "not-a-cone", {c.name(a.map)}))
      return rep;
  bool big = d.nodes.size() > kMaxLimitNodes || d.arrows.size() > kMaxLimitArrows;
  std::size_t budget = big ? o.samples.value_or(1000) : SIZE_MAX;
  for (auto&& m : c.objects()) {
    auto into_l = hom_of(c, m, l);
    bool more = detail::enumerate_families<C>(
        c, d, m, [](const MorOf<C>&) { return true; },
        [&](const MorOf<C>& s, const MorOf<C>& qa, const MorOf<C>& qb) {
          return detail::lax_arrow(c, s, qa, qb);
        },
        [&](const std::vector<MorOf<C>>& q) {
          if (rep.checked >= budget) return false;
          ++rep.checked;
          auto e = c.id(m);
          for (auto& h : q) e = c.compose(c.rst(h), e);
          int n = 0;
          for (auto& f : into_l) {
            if (!(c.rst(f) == e)) continue;
            bool ok = true;
            for (std::size_t v = 0; v < q.size() && ok; ++v)
              ok = c.compose(legs[v], f) == c.compose(q[v], e);
            if (ok) ++n;
          }
          if (n != 1) {
            std::vector<std::string> w;
            for (auto& h : q) w.push_back(c.name(h));
            if (w.empty()) w.push_back(c.obj_name(m));
            return !rep.fail(o, n == 0 ? "no-factorization" : "factorization-not-unique", w);
          }
          return true;
        });
    if (!more) break;
  }
  if (big) {
    rep.sampled = true;
    rep.note = "shape exceeds " + std::to_string(kMaxLimitNodes) + " nodes / " +
               std::to_string(kMaxLimitArrows) + " arrows; lax cones capped at " +
               std::to_string(budget);
  }
  return rep;
}

// restriction limit of f : X -> Y: a splitting p : P -> X, s : X -> P of r̄f
template <Category C>
struct ArrowLimit {
  ObjOf<C> obj;
  MorOf<C> p, s;
  LawReport universal;
};

template <class C>
  requires RestrictionCategory<C>
std::optional<ArrowLimit<C>> restriction_limit_of_arrow(const C& c, const MorOf<C>& f,
                                                        const CheckOptions& o = {}) {
  auto sp = find_splitting(c, c.rst(f));
  if (!sp) return std::nullopt;
  Diagram<C> d{{c.dom(f), c.cod(f)}, {{0, 1, f}}};
  auto rep = check_restriction_limit(c, d, sp->obj, {sp->incl, c.compose(f, sp->incl)}, o);
  return ArrowLimit<C>{sp->obj, sp->incl, sp->retr, std::move(rep)};
}

// ---- limits in Total(X) -------------------------------------------------

template <Category C>
struct TotalLimit {
  ObjOf<C> obj;
  std::vector<MorOf<C>> legs;
};

// (L, legs) is a limit of d among total maps: every total cone factors
// uniquely through a total map
template <class C>
  requires RestrictionCategory<C>
bool is_total_limit(const C& c, const Diagram<C>& d, const ObjOf<C>& l,
                    const std::vector<MorOf<C>>& legs) {
  auto total = [&](const MorOf<C>& h) { return is_total(c, h); };
  auto commutes = [&](const MorOf<C>& s, const MorOf<C>& qa, const MorOf<C>& qb) {
    return c.compose(s, qa) == qb;
  };
  for (auto&& m : c.objects()) {
    std::vector<MorOf<C>> us;
    for (auto&& u : c.hom(m, l))
      if (total(u)) us.push_back(u);
    bool ok = detail::enumerate_families<C>(c, d, m, total, commutes,
                                            [&](const std::vector<MorOf<C>>& q) {
                                              int n = 0;
                                              for (auto& u : us) {
                                                bool hit = true;
                                                for (std::size_t v = 0; v < q.size() && hit; ++v)
                                                  hit = c.compose(legs[v], u) == q[v];
                                                if (hit && ++n > 1) return false;
                                              }
                                              return n == 1;
                                            });
    if (!ok) return false;
  }
  return true;
}

// first (object, cone) in scope order that is a limit in Total
template <class C>
  requires RestrictionCategory<C>
std::optional<TotalLimit<C>> find_total_limit(const C& c, const Diagram<C>& d) {
  auto total = [&](const MorOf<C>& h) { return is_total(c, h); };
  auto commutes = [&](const MorOf<C>& s, const MorOf<C>& qa, const MorOf<C>& qb) {
    return c.compose(s, qa) == qb;
  };
  for (auto&& l : c.objects()) {
    std::optional<TotalLimit<C>> found;
    detail::enumerate_families<C>(c, d, l, total, commutes,
                                  [&](const std::vector<MorOf<C>>& legs) {
                                    if (!is_total_limit(c, d, l, legs)) return true;
                                    found = TotalLimit<C>{l, legs};
                                    return false;
                                  });
    if (found) return found;
  }
  return std::nullopt;
}

template <Category C>
struct DiagramLimit {
  ObjOf<C> obj;
  std::vector<MorOf<C>> legs;  // i_C·p_C
  Diagram<C> restricted;       // S'
  std::vector<MorOf<C>> domains;  // e_C
  LawReport universal;
};

// e_C = composite of r̄(S path) over paths out of C; split e_C as
// i_C : S'C -> SC; take the limit p_C : L -> S'C of S' in Total; return
// the cone i_C·p_C and check it against every lax cone.
template <class C>
  requires RestrictionCategory<C>
DiagramLimit<C> restriction_limit_of_diagram(const C& c, const Diagram<C>& d,
                                             const CheckOptions& o = {}) {
  detail::validate_diagram(c, d);
  const auto n = d.nodes.size();
  DiagramLimit<C> out;
  std::vector<Splitting<ObjOf<C>, MorOf<C>>> sp;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<MorOf<C>> paths;
    detail::paths_from(c, d, v, c.id(d.nodes[v]), paths);
    auto e = c.id(d.nodes[v]);
    for (auto& p : paths) e = c.compose(c.rst(p), e);
    out.domains.push_back(e);
    auto s = find_splitting(c, e);
    if (!s) throw NotSplit("restriction idempotent " + c.name(e) + " does not split");
    sp.push_back(*s);
    out.restricted.nodes.push_back(s->obj);
  }
  for (auto& a : d.arrows)
    out.restricted.arrows.push_back(
        {a.from, a.to, c.compose(sp[a.to].retr, c.compose(a.map, sp[a.from].incl))});
  auto lim = find_total_limit(c, out.restricted);
  if (!lim) throw NoTotalLimit("the restricted diagram has no limit among total maps in scope");
  out.obj = lim->obj;
  for (std::size_t v = 0; v < n; ++v) out.legs.push_back(c.compose(sp[v].incl, lim->legs[v]));
  out.universal = check_restriction_limit(c, d, out.obj, out.legs, o);
  return out;
}

// ---- equalizers in Total via separable objects --------------------------

template <Category C>
struct Equalizer {
  ObjOf<C> obj;
  MorOf<C> incl;
  LawReport universal;
};

// i : E -> X equalizes f, g among total maps: fi = gi and every total j with
// fj = gj factors uniquely through i by a total map
template <class C>
  requires RestrictionCategory<C>
LawReport check_total_equalizer(const C& c, const MorOf<C>& f, const MorOf<C>& g,
                                const MorOf<C>& i, const CheckOptions& o = {}) {
  LawReport rep;
  if (!is_total(c, i) && rep.fail(o, "not-total", {c.name(i)})) return rep;
  if (!(c.compose(f, i) == c.compose(g, i)) && rep.fail(o, "not-equalizing", {c.name(i)}))
    return rep;
  for (auto&& m : c.objects())
    for (auto&& j : c.hom(m, c.dom(f))) {
      if (!is_total(c, j) || !(c.compose(f, j) == c.compose(g, j))) continue;
      ++rep.checked;
      int n = 0;
      for (auto&& u : c.hom(m, c.dom(i)))
        if (is_total(c, u) && c.compose(i, u) == j) ++n;
      if (n != 1 && rep.fail(o, n ? "factorization-not-unique" : "no-factorization", {c.name(j)}))
        return rep;
    }
  return rep;
}

// first equalizer of f, g in Total found by search over the scope
template <class C>
  requires RestrictionCategory<C>
std::optional<std::pair<ObjOf<C>, MorOf<C>>> find_total_equalizer(const C& c, const MorOf<C>& f,
                                                                   const MorOf<C>& g) {
  for (auto&& e : c.objects())
    for (auto&& i : c.hom(e, c.dom(f)))
      if (is_total(c, i) && c.compose(f, i) == c.compose(g, i) &&
          check_total_equalizer(c, f, g, i).passed())
        return std::pair{e, i};
  return std::nullopt;
}

// r : Y×Y -> Y with r·Δ = 1 and Δ·r = r̄r
template <class C>
  requires RestrictionCategory<C> && HasRestrictionProducts<C>
std::optional<MorOf<C>> diagonal_retraction(const C& c, const ObjOf<C>& y) {
  auto yy = c.prod(y, y);
  if (!yy) return std::nullopt;
  auto d = c.diag(y);
  for (auto&& r : c.hom(*yy, y))
    if (c.compose(r, d) == c.id(y) && c.compose(d, r) == c.rst(r)) return r;
  return std::nullopt;
}

// h = (f×g)Δ, r the restriction retraction of Δ_Y, split r̄(r·h) as i
template <class C>
  requires RestrictionCategory<C> && HasRestrictionProducts<C>
Equalizer<C> total_equalizer(const C& c, const MorOf<C>& f, const MorOf<C>& g,
                             const CheckOptions& o = {}) {
  if (!(c.dom(f) == c.dom(g)) || !(c.cod(f) == c.cod(g)))
    throw NotParallel(c.name(f) + " and " + c.name(g) + " are not parallel");
  if (!is_total(c, f) || !is_total(c, g))
    throw InvalidWitness("total_equalizer needs total maps");
  auto x = c.dom(f), y = c.cod(f);
  auto r = diagonal_retraction(c, y);
  if (!r) throw NotSeparable(c.obj_name(y) + " is not separable");
  auto h = c.compose(c.tensor(f, g), c.diag(x));
  auto e = c.rst(c.compose(*r, h));
  auto sp = find_splitting(c, e);
  if (!sp) throw NotSplit("restriction idempotent " + c.name(e) + " does not split");
  return {sp->obj, sp->incl, check_total_equalizer(c, f, g, sp->incl, o)};
}

}  // namespace rcat
