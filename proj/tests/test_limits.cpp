#include <bit>
#include <cmath>

#include "doctest.h"
#include "perturbed.hpp"
#include "rcat/instances.hpp"
#include "rcat/limits.hpp"
#include "rcat/par.hpp"
#include "rcat/products.hpp"
#include "rcat/views.hpp"

using namespace rcat;
using rcat::testing::BadDiagPar;
using rcat::testing::PartialTerminalPar;

namespace {

constexpr int U = PartialFn::kUndef;

// Par with the first projection 2×1 -> 2 undefined at (0,0)
struct PartialProjPar : ParCat {
  using ParCat::ParCat;
  PartialFn proj1(int a, int b) const {
    auto p = par_proj1(a, b);
    if (a == 2 && b == 1) p.t[0] = U;
    return p;
  }
};

// domain of a partial map as a bitmask
unsigned domain_mask(const PartialFn& f) {
  unsigned m = 0;
  for (int x = 0; x < f.src; ++x)
    if (f.defined(x)) m |= 1u << x;
  return m;
}

PartialFn partial_identity(int n, unsigned mask) {
  std::vector<int> t(n, U);
  for (int x = 0; x < n; ++x)
    if (mask >> x & 1u) t[x] = x;
  return {n, n, t};
}

}  // namespace

TEST_CASE("restriction products on Par") {
  ParCat par(2);
  CHECK(check_restriction_products(par).passed());
  CHECK(check_p_category(par).passed());
  auto eq = check_product_equivalence(par);
  CHECK(eq.agree());
  CHECK(eq.restriction_products.passed());

  FinRCat p2 = par_to_rcat(2);
  auto rp = par_products(p2, 2);
  FinView v(p2, nullptr, &rp);
  CHECK(check_restriction_products(v).passed());
  CHECK(check_p_category(v).passed());

  // the p-category restriction is the partial identity on the domain
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (auto& f : par.hom(a, b)) {
        CHECK(derive_restriction(par, f) == partial_identity(a, domain_mask(f)));
        if (f.total()) CHECK(derive_restriction(par, f) == PartialFn::identity(a));
      }
}

TEST_CASE("restriction products reject perturbations") {
  auto rp = check_restriction_products(PartialProjPar(2));
  REQUIRE_FALSE(rp.passed());
  CHECK(rp.first()->tag == "proj-total");

  for (int which = 0; which < 2; ++which) {
    ProductEquivalence eq = which == 0 ? check_product_equivalence(BadDiagPar(2))
                                       : check_product_equivalence(PartialTerminalPar(2));
    CHECK_FALSE(eq.restriction_products.passed());
    CHECK_FALSE(eq.p_category.passed());
    CHECK(eq.agree());
  }
  auto bad_diag = check_restriction_products(BadDiagPar(2));
  CHECK(bad_diag.first()->tag == "triangle-q");
  auto bad_t = check_restriction_products(PartialTerminalPar(2));
  CHECK(bad_t.first()->tag == "terminal-total");
}

TEST_CASE("trivial restriction with genuine products") {
  auto fs = finset_fragment(2);
  REQUIRE(fs.has_products);
  auto v = fs.view();
  CHECK(check_restriction_products(v).passed());
  CHECK(check_p_category(v).passed());
  auto g = triviality_guard(v);
  CHECK(g.premise_terminal);
  CHECK(g.premise_products);
  CHECK(g.report.passed());

  auto gp = triviality_guard(ParCat(2));
  CHECK_FALSE(gp.premise_terminal);
  CHECK_FALSE(gp.premise_products);
  CHECK(gp.report.passed());
}

TEST_CASE("restriction terminal") {
  ParCat par(3);
  auto tc = restriction_terminal_check(par);
  CHECK(tc.report.passed());
  REQUIRE(tc.tables.size() == 4);
  for (int a = 0; a <= 3; ++a) {
    CHECK(tc.tables[a].maps == (1u << a));
    CHECK(tc.tables[a].idempotents == (1u << a));
    CHECK(tc.tables[a].bijective);
  }
  CHECK(tc.tables[0].pairs.size() == 1);

  // a two-point "terminal" with constant maps
  auto bad = restriction_terminal_check<ParCat>(
      par, 2, [](const int& a) { return a == 2 ? PartialFn::identity(2) : PartialFn::constant(a, 2, 0); });
  REQUIRE_FALSE(bad.report.passed());
  CHECK(bad.report.first()->tag == "rid-bijection");
  CHECK(bad.tables[1].maps == 3);
  CHECK(bad.tables[1].idempotents == 2);
}

TEST_CASE("products in the ordinary sense") {
  ParCat par(3);
  auto pr = find_ordinary_product(par, 1, 1);
  REQUIRE(pr);
  CHECK(pr->obj == 3);
  CHECK(*par.ord_prod(1, 1) == 3);
  CHECK(pr->witness_objects == 1);
  CHECK(pr->cones == 6);  // one product cone per automorphism of 3
  CHECK(is_ordinary_product(par, par_ord_proj1(1, 1), par_ord_proj2(1, 1)));
  CHECK_FALSE(is_ordinary_product(par, par_proj1(1, 1), par_proj2(1, 1)));

  CHECK_FALSE(find_ordinary_product(ParCat(2), 1, 1));

  auto fs = finset_fragment(2);
  auto v = fs.view();
  auto fp = find_ordinary_product(v, 1, 2);
  REQUIRE(fp);
  CHECK(fp->obj == 2);
  CHECK(find_ordinary_product(v, 2, 1)->obj == 2);
}

TEST_CASE("idempotent lattice on Par") {
  ParCat par(3);
  auto lat = idempotent_lattice(par, 3);
  CHECK(lat.laws.passed());
  CHECK(lat.elems.size() == 8);
  auto e = PartialFn(3, 3, {0, 1, U}), e2 = PartialFn(3, 3, {U, 1, 2});
  auto i = lat.index(e), j = lat.index(e2);
  CHECK(lat.elems[lat.join[i][j]] == PartialFn::identity(3));
  CHECK(lat.elems[lat.meet[i][j]] == PartialFn(3, 3, {U, 1, U}));
  CHECK(lat.join[i][i] == i);
  CHECK(lat.elems[lat.bottom] == PartialFn::nowhere(3, 3));
  CHECK(lat.elems[lat.top] == PartialFn::identity(3));

  // join is union and meet intersection of domains
  for (int a = 0; a <= 3; ++a) {
    auto l = idempotent_lattice(par, a);
    CHECK(l.laws.passed());
    for (std::size_t x = 0; x < l.elems.size(); ++x)
      for (std::size_t y = 0; y < l.elems.size(); ++y) {
        auto mx = domain_mask(l.elems[x]), my = domain_mask(l.elems[y]);
        CHECK(domain_mask(l.elems[l.join[x][y]]) == (mx | my));
        CHECK(domain_mask(l.elems[l.meet[x][y]]) == (mx & my));
      }
  }

  // substitution along every map
  std::vector<IdempotentLattice<ParCat>> lats;
  for (int a = 0; a <= 3; ++a) lats.push_back(idempotent_lattice(par, a));
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (auto& f : par.hom(a, b)) {
        auto s = check_substitution(par, f, lats[a], lats[b]);
        CHECK(s.meets);
        CHECK(s.joins);
        CHECK(s.bottom);
        CHECK(s.top == f.total());
      }
}

TEST_CASE("idempotent lattice from searched products") {
  FinRCat p3 = par_to_rcat(3);
  FinView v(p3);
  const auto& c = p3.base();
  ObjId one = c.find_object("1"), two = c.find_object("2");
  auto lat = idempotent_lattice(v, one);
  CHECK(lat.laws.passed());
  CHECK(lat.elems.size() == 2);
  CHECK(c.name(lat.elems[lat.bottom]) == "1>1:-");
  CHECK(c.name(lat.elems[lat.top]) == "1>1:0");
  // 2 × 2 in the ordinary sense has 8 points, outside the table
  CHECK_THROWS_AS(idempotent_lattice(v, two), NoProducts);
  // trivial restriction: the lattice is a point
  auto fs = finset_fragment(2);
  auto fl = idempotent_lattice(fs.view(), fs.x.base().find_object("1"));
  CHECK(fl.elems.size() == 1);
  CHECK(fl.laws.passed());
}

TEST_CASE("restriction limit of an arrow") {
  ParCat par(2);
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (auto& f : par.hom(a, b)) {
        auto lim = restriction_limit_of_arrow(par, f);
        REQUIRE(lim);
        CHECK(lim->universal.passed());
        CHECK(lim->obj == std::popcount(domain_mask(f)));
        CHECK(par.compose(lim->p, lim->s) == par.rst(f));
        CHECK(par.compose(lim->s, lim->p) == PartialFn::identity(lim->obj));
        if (f.total()) {
          CHECK(lim->obj == a);
          CHECK(lim->p == PartialFn::identity(a));
          CHECK(lim->s == PartialFn::identity(a));
        }
      }

  // a table without the splitting: only the endomaps of 2 besides identities
  FinRCat p2 = par_to_rcat(2);
  const auto& c = p2.base();
  ObjId two = c.find_object("2");
  auto sub = restriction_subcategory(p2, [&](MorId f) {
    return (c.dom(f) == two && c.cod(f) == two) || f == c.id(c.dom(f));
  });
  FinView sv(sub.rcat);
  MorId f = sub.rcat.base().find_morphism("2>2:0,-");
  CHECK_FALSE(restriction_limit_of_arrow(sv, f));
  CHECK(restriction_limit_of_arrow(sv, sub.rcat.base().find_morphism("2>2:1,0")));
}

TEST_CASE("restriction limits of diagrams") {
  ParCat par(3);
  // empty diagram: the restriction terminal
  Diagram<ParCat> empty;
  auto l0 = restriction_limit_of_diagram(par, empty);
  CHECK(l0.obj == 1);
  CHECK(l0.universal.passed());

  // two objects, no arrows: the restriction product
  Diagram<ParCat> disc{{1, 2}, {}};
  auto l1 = restriction_limit_of_diagram(ParCat(2), disc);
  CHECK(l1.obj == 2);
  CHECK(l1.universal.passed());
  CHECK(l1.legs[0] == par_proj1(1, 2));
  CHECK(is_total(par, l1.legs[1]));
  CHECK(std::popcount(domain_mask(l1.legs[1])) == 2);
  CHECK(par_compose(l1.legs[1], l1.legs[1]).total());

  // one arrow: agrees with the arrow limit
  for (auto& f : par.hom(2, 2)) {
    Diagram<ParCat> d{{2, 2}, {{0, 1, f}}};
    auto ld = restriction_limit_of_diagram(ParCat(2), d);
    auto la = restriction_limit_of_arrow(ParCat(2), f);
    REQUIRE(la);
    CHECK(ld.obj == la->obj);
    CHECK(par.rst(ld.legs[0]) == PartialFn::identity(ld.obj));
    CHECK(par.rst(par.compose(la->s, ld.legs[0])) == PartialFn::identity(ld.obj));
    CHECK(ld.universal.passed());
  }

  // a cospan with one partial leg: the partial map restricts its node first
  PartialFn f(2, 1, {0, U}), g(2, 1, {0, 0});
  Diagram<ParCat> cospan{{2, 1, 2}, {{0, 1, f}, {2, 1, g}}};
  auto lc = restriction_limit_of_diagram(par, cospan);
  CHECK(lc.domains[0] == PartialFn(2, 2, {0, U}));
  CHECK(lc.obj == 2);  // {0} × {0,1}
  CHECK(lc.universal.passed());
  CHECK(lc.universal.checked > 0);

  // a diamond a -> b, a -> c, b -> d, c -> d
  Diagram<ParCat> diamond{{2, 1, 2, 1},
                          {{0, 1, PartialFn(2, 1, {0, U})},
                           {0, 2, PartialFn(2, 2, {1, 0})},
                           {1, 3, PartialFn::identity(1)},
                           {2, 3, PartialFn(2, 1, {U, 0})}}};
  auto lq = restriction_limit_of_diagram(par, diamond);
  CHECK(lq.universal.passed());
  CHECK(lq.domains[0] == PartialFn(2, 2, {0, U}));
  CHECK(lq.obj == 1);

  CHECK_THROWS_AS(restriction_limit_of_diagram(par, Diagram<ParCat>{{2}, {{0, 0, PartialFn::identity(2)}}}),
                  ShapeMismatch);
  CHECK_THROWS_AS(restriction_limit_of_diagram(par, Diagram<ParCat>{{2, 1}, {{0, 1, PartialFn::identity(2)}}}),
                  ShapeMismatch);
}

TEST_CASE("restriction limits need splittings") {
  FinRCat p2 = par_to_rcat(2);
  const auto& c = p2.base();
  ObjId two = c.find_object("2");
  auto sub = restriction_subcategory(p2, [&](MorId f) {
    return (c.dom(f) == two && c.cod(f) == two) || f == c.id(c.dom(f));
  });
  FinView sv(sub.rcat);
  MorId f = sub.rcat.base().find_morphism("2>2:0,-");
  Diagram<FinView> d{{two, two}, {{0, 1, f}}};
  CHECK_THROWS_AS(restriction_limit_of_diagram(sv, d), NotSplit);
}

TEST_CASE("equalizers in Total(K_r(Par))") {
  ParCat par(2);
  KrView<ParCat> kr(par);
  SplitObject<ParCat> x{2, PartialFn::identity(2)};
  auto mk = [&](std::vector<int> t) { return SplitMor<ParCat>{PartialFn(2, 2, t), x, x}; };

  auto e1 = total_equalizer(kr, mk({0, 1}), mk({0, 0}));
  CHECK(e1.universal.passed());
  CHECK(e1.obj == SplitObject<ParCat>{2, PartialFn(2, 2, {0, U})});
  auto same = total_equalizer(kr, mk({1, 0}), mk({1, 0}));
  CHECK(same.obj == x);
  CHECK(same.incl == kr.id(x));
  auto none = total_equalizer(kr, mk({0, 1}), mk({1, 0}));
  CHECK(none.obj == SplitObject<ParCat>{2, PartialFn::nowhere(2, 2)});
  CHECK(none.universal.passed());

  // every parallel pair of total maps, against a brute-force equalizer
  std::size_t pairs = 0;
  for (auto& a : kr.objects())
    for (auto& b : kr.objects()) {
      std::vector<SplitMor<ParCat>> tot;
      for (auto& f : kr.hom(a, b))
        if (is_total(kr, f)) tot.push_back(f);
      for (auto& f : tot)
        for (auto& g : tot) {
          ++pairs;
          auto eq = total_equalizer(kr, f, g);
          CHECK(eq.universal.passed());
          auto bf = find_total_equalizer(kr, f, g);
          REQUIRE(bf);
          // the comparison map is a total isomorphism
          std::size_t isos = 0;
          for (auto& u : kr.hom(eq.obj, bf->first))
            if (is_total(kr, u) && kr.compose(bf->second, u) == eq.incl)
              for (auto& w : kr.hom(bf->first, eq.obj))
                if (kr.compose(u, w) == kr.id(bf->first) && kr.compose(w, u) == kr.id(eq.obj))
                  ++isos;
          CHECK(isos == 1);
        }
    }
  CHECK(pairs > 50);

  // FinSet with trivial restriction: 2 is not separable
  auto fs = finset_fragment(4);
  auto v = fs.view();
  const auto& c = fs.x.base();
  MorId c0 = c.find_morphism("1>2:0"), c1 = c.find_morphism("1>2:1");
  CHECK_THROWS_AS(total_equalizer(v, c0, c1), NotSeparable);
  CHECK_THROWS_AS(total_equalizer(v, c0, c.id(c.find_object("2"))), NotParallel);
}

TEST_CASE("restriction limit universal property rejects wrong cones") {
  ParCat par(2);
  PartialFn f(2, 1, {0, U});
  Diagram<ParCat> arrow{{2, 1}, {{0, 1, f}}};
  // the identity leg makes f·p partial
  auto r1 = check_restriction_limit(par, arrow, 2, {PartialFn::identity(2), f});
  REQUIRE_FALSE(r1.passed());
  CHECK(r1.first()->tag == "leg-not-total");
  // 1 with the diagonal legs is a cone over {1, 1} but not the product
  Diagram<ParCat> disc{{1, 1}, {}};
  auto r2 = check_restriction_limit(par, disc, 1, {PartialFn::identity(1), PartialFn::identity(1)});
  CHECK(r2.passed());  // 1×1 = 1 in Par
  Diagram<ParCat> disc2{{2, 1}, {}};
  auto r3 = check_restriction_limit(par, disc2, 1, {PartialFn(1, 2, {0}), PartialFn::identity(1)});
  REQUIRE_FALSE(r3.passed());
  CHECK(r3.first()->tag == "no-factorization");
  // a product object with a redundant point: factorizations are not unique
  auto r4 = check_restriction_limit(par, disc2, 2, {PartialFn(2, 2, {0, 1}), PartialFn(2, 1, {0, 0})});
  CHECK(r4.passed());
  Diagram<ParCat> one{{1}, {}};
  auto r5 = check_restriction_limit(par, one, 2, {PartialFn(2, 1, {0, 0})});
  REQUIRE_FALSE(r5.passed());
  CHECK(r5.first()->tag == "factorization-not-unique");
  // a leg family that does not commute
  auto r6 = check_restriction_limit(par, Diagram<ParCat>{{2, 2}, {{0, 1, PartialFn(2, 2, {1, 0})}}}, 2,
                                    {PartialFn::identity(2), PartialFn::identity(2)});
  REQUIRE_FALSE(r6.passed());
  CHECK(r6.first()->tag == "not-a-cone");

  // lax cones: q_D ≤ Sf·q_C
  CHECK(is_lax_cone(par, arrow, {PartialFn::identity(2), PartialFn(2, 1, {0, U})}));
  CHECK(is_lax_cone(par, arrow, {PartialFn::identity(2), PartialFn::nowhere(2, 1)}));
  CHECK_FALSE(is_lax_cone(par, arrow, {PartialFn::identity(2), PartialFn(2, 1, {0, 0})}));
}

TEST_CASE("arrow limits over the Par table") {
  FinRCat p3 = par_to_rcat(3);
  FinView v(p3);
  const auto& c = p3.base();
  std::size_t n = 0;
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    auto lim = restriction_limit_of_arrow(v, f);
    REQUIRE(lim);
    ++n;
    CHECK(lim->universal.passed());
    CHECK(c.compose(lim->p, lim->s) == p3.rst(f));
    CHECK(c.compose(lim->s, lim->p) == c.id(lim->obj));
    auto name = c.name(f);
    std::size_t defined = 0;
    for (char ch : name.substr(name.find(':') + 1))
      if (ch >= '0' && ch <= '9') ++defined;
    CHECK(c.obj_name(lim->obj) == std::to_string(defined));
  }
  std::size_t oracle = 0;
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b) oracle += static_cast<std::size_t>(std::pow(b + 1, a));
  CHECK(n == oracle);
}
