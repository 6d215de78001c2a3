#include "doctest.h"
#include "rcat/fin_view.hpp"
#include "rcat/par.hpp"
#include "rcat/restriction.hpp"
#include "support.hpp"

using namespace rcat;
using rcat::testing::Gen;
using rcat::testing::table_of;

TEST_CASE("par_compose") {
  PartialFn g(2, 2, {1, -1});
  CHECK(par_compose(g, PartialFn::identity(2)) == g);
  PartialFn f(2, 1, {0, -1}), h(1, 2, {1});
  auto gf = par_compose(h, f);
  CHECK(gf == PartialFn(2, 2, {1, -1}));
  CHECK(par_compose(g, PartialFn::nowhere(3, 2)) == PartialFn::nowhere(3, 2));
  CHECK_THROWS_AS(par_compose(f, f), ShapeMismatch);
}

TEST_CASE("par_compose agrees with the pointwise oracle") {
  Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    int a = gen.size(4), b = gen.size(4), c = gen.size(4);
    auto f = gen.partial(a, b), g = gen.partial(b, c);
    CHECK(table_of(par_compose(g, f)) == testing::oracle_compose(table_of(g), table_of(f)));
    CHECK(table_of(par_restriction(f)) == testing::oracle_domain(table_of(f)));
  }
}

TEST_CASE("par_restriction") {
  CHECK(par_restriction(PartialFn(2, 1, {0, 0})) == PartialFn::identity(2));
  CHECK(par_restriction(PartialFn(3, 5, {4, -1, 0})) == PartialFn(3, 3, {0, -1, 2}));
  CHECK(par_restriction(PartialFn::nowhere(2, 3)) == PartialFn::nowhere(2, 2));
}

TEST_CASE("restriction axioms pointwise up to size 4") {
  // exhaustive for sizes <= 3 through the generic checker on the virtual category
  CHECK(check_restriction_axioms(ParCat(3)).passed());
  // randomized for size 4 shapes
  Gen gen(5);
  for (int i = 0; i < 3000; ++i) {
    int a = gen.size(4), b = gen.size(4), c = gen.size(4);
    auto f = gen.partial(a, b), g = gen.partial(a, c), h = gen.partial(b, c);
    auto r = par_restriction;
    CHECK(par_compose(f, r(f)) == f);
    CHECK(par_compose(r(f), r(g)) == par_compose(r(g), r(f)));
    CHECK(r(par_compose(g, r(f))) == par_compose(r(g), r(f)));
    CHECK(par_compose(r(h), f) == par_compose(f, r(par_compose(h, f))));
  }
}

TEST_CASE("par_to_rcat") {
  FinRCat p0 = par_to_rcat(0);
  CHECK(p0.base().num_objects() == 1);
  CHECK(p0.base().num_morphisms() == 1);
  CHECK(check_restriction_axioms(FinView(p0)).passed());
  FinRCat p2 = par_to_rcat(2);
  CHECK(p2.base().hom(2, 2).size() == 9);
  CHECK(check_monics_total(FinView(p2)).passed());
  CHECK(par_to_rcat(3).base().num_morphisms() == 144);
  CHECK_THROWS_AS(par_to_rcat(4, 1000), CapExceeded);
  // restriction idempotents on n are exactly the 2^n partial identities
  FinRCat p3 = par_to_rcat(3);
  FinView v(p3);
  ParIndex ix(3);
  for (int n = 0; n <= 3; ++n) {
    auto es = restriction_idempotents(v, n);
    CHECK(es.size() == (1u << n));
    for (MorId e : es) {
      auto fn = ix.fn(e);
      for (int x = 0; x < n; ++x) CHECK((fn(x) == x || fn(x) == -1));
    }
  }
}

TEST_CASE("ids follow the lexicographic rank") {
  ParIndex ix(3);
  FinRCat p3 = par_to_rcat(3);
  for (MorId f = 0; f < static_cast<MorId>(p3.base().num_morphisms()); ++f) {
    CHECK(ix.id_of(ix.fn(f)) == f);
    CHECK(p3.base().name(f) == ix.fn(f).name());
  }
}

TEST_CASE("text form") {
  PartialFn f(3, 2, {1, -1, 0});
  CHECK(f.text() == "3 2 1 - 0");
  CHECK(PartialFn::parse(f.text()) == f);
  CHECK(f.name() == "3>2:1,-,0");
  CHECK_THROWS_AS(PartialFn::parse("2 1 0"), MalformedTable);
  CHECK_THROWS_AS(PartialFn::parse("2 1 0 3"), MalformedTable);
  CHECK_THROWS_AS(PartialFn::parse("2 1 0 x"), MalformedTable);
}

TEST_CASE("Kleisli category of +1") {
  CHECK(kleisli_plus_one_check(3).passed());
  // |FinSet(2, 3)| = 9 = |Par(2,2)|
  int total = 0;
  for (auto& f : all_partial_fns(2, 3)) total += f.total();
  CHECK(total == 9);
  // the zero map A -> 1 -> A+1 is its own Kleisli restriction
  for (int a = 0; a <= 3; ++a) {
    PartialFn zero = PartialFn::constant(a, a + 1, a);
    CHECK(kleisli_restriction_formula(zero) == zero);
    CHECK(kleisli_restriction_formula(par_inl(a, 1)) == par_inl(a, 1));
  }
}
