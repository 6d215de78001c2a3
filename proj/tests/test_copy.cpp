#include <cmath>
#include <numeric>

#include "doctest.h"
#include "perturbed.hpp"
#include "rcat/copy.hpp"
#include "rcat/instances.hpp"
#include "rcat/kleisli.hpp"
#include "rcat/par.hpp"
#include "support.hpp"

using namespace rcat;
using rcat::testing::BadDiagPar;
using rcat::testing::PartialTerminalPar;

namespace {

constexpr int U = PartialFn::kUndef;

// a FinSet map A -> B+1 read as a partial map A -> B, the last point meaning ⊥
PartialFn to_par(const PartialFn& f, int b) {
  std::vector<int> t;
  for (int x : f.t) t.push_back(x == b ? U : x);
  return {f.src, b, t};
}

// one-object category from a finite monoid given by its multiplication table
struct MonoidCat {
  FinCategory cat;
  FinView view() const { return FinView(cat); }
};

MonoidCat monoid_cat(const std::vector<std::vector<int>>& mul, int unit) {
  CategoryData d;
  d.objects = {"*"};
  for (std::size_t i = 0; i < mul.size(); ++i) d.morphisms.push_back({"m" + std::to_string(i), 0, 0});
  d.identity = {unit};
  return {FinCategory(std::move(d), [mul](MorId g, MorId f) { return MorId{mul[g][f]}; })};
}

// ⊗ = multiplication (a functor since the monoid is commutative), τ = 1
StrictMonoidalData<FinView> monoid_monoidal(const FinView& v, const std::vector<std::vector<int>>& mul) {
  return {[](ObjId, ObjId) { return std::optional<ObjId>(0); },
          [mul](MorId f, MorId g) { return MorId{mul[f][g]}; }, 0,
          [&v](ObjId, ObjId) { return v.id(0); }};
}

int oracle_units(const std::vector<std::vector<int>>& mul, int unit) {
  int n = 0;
  for (std::size_t x = 0; x < mul.size(); ++x)
    for (std::size_t y = 0; y < mul.size(); ++y)
      if (mul[x][y] == unit) {
        ++n;
        break;
      }
  return n;
}

std::vector<std::vector<int>> cyclic_add(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = (i + j) % n;
  return m;
}

std::vector<std::vector<int>> cyclic_mul(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = (i * j) % n;
  return m;
}

}  // namespace

TEST_CASE("counital copy structure on Par") {
  ParCat par(2);
  auto m = monoidal_from_products(par);
  auto cs = copy_from_products(par);
  auto rep = check_counital_copy(par, m, cs);
  CHECK(rep.passed());
  CHECK(rep.note.empty());
  // the derived restriction is the Par restriction
  for (auto& f : all_morphisms(par)) CHECK(copy_restriction(par, m, cs, f) == par.rst(f));

  SUBCASE("total maps are the counit-preserving ones") {
    for (auto& f : all_morphisms(par)) {
      bool preserving = par.compose(cs.counit(f.tgt), f) == cs.counit(f.src);
      CHECK(preserving == f.total());
    }
  }
  SUBCASE("Δ on the unit must be the identity") {
    CopyStructure<ParCat> bad = cs;
    bad.copy = [&](int a) { return a == 1 ? PartialFn::nowhere(1, 1) : par.diag(a); };
    auto r = check_counital_copy(par, m, bad);
    CHECK_FALSE(r.passed());
  }
  SUBCASE("a perturbed diagonal breaks coassociativity or naturality") {
    CopyStructure<ParCat> bad = cs;
    bad.copy = [&](int a) { return a == 2 ? PartialFn(2, 4, {0, 2}) : par.diag(a); };
    CHECK_FALSE(check_counital_copy(par, m, bad).passed());
  }
  SUBCASE("trivial category") {
    auto in = trivial_instance();
    auto v = in.view();
    CHECK(check_counital_copy(v, monoidal_from_products(v), copy_from_products(v)).passed());
  }
  SUBCASE("sampled mode agrees") {
    CopyCheckOptions co;
    co.base.samples = 500;
    auto r = check_counital_copy(par, m, cs, co);
    CHECK(r.passed());
    CHECK(r.sampled);
  }
}

TEST_CASE("three descriptions of restriction products agree") {
  auto good = check_structure_equivalence(ParCat(2));
  CHECK(good.agree());
  CHECK(good.restriction_products.passed());
  CHECK(good.counital_copy.passed());

  auto diag = check_structure_equivalence(BadDiagPar(2));
  CHECK(diag.agree());
  CHECK_FALSE(diag.counital_copy.passed());

  auto term = check_structure_equivalence(PartialTerminalPar(2));
  CHECK(term.agree());
  CHECK_FALSE(term.p_category.passed());
}

TEST_CASE("comonoids") {
  SUBCASE("FinSet: the diagonal is the only comonoid") {
    FinSetCat fs(2);
    auto m = monoidal_from_products(fs);
    auto ks = enumerate_comonoids(fs, m);
    // oracle: pointwise counit laws force δ(x) = (x, x); ε is forced
    for (int a = 0; a <= 2; ++a) {
      int count = 0;
      for (auto& d : all_total_fns(a, a * a)) {
        bool ok = true;
        for (int x = 0; x < a; ++x) ok = ok && d(x) == x * a + x;
        count += ok;
      }
      int found = 0;
      for (auto& k : ks)
        if (k.obj == a) {
          ++found;
          CHECK(k.delta == fs.diag(a));
        }
      CHECK(found == count);
      CHECK(found == 1);
    }
    CopyView<FinSetCat> cv(fs, m, ks);
    CHECK(check_counital_copy(cv, copy_view_monoidal(cv), copy_view_structure(cv)).passed());
  }
  SUBCASE("Par: exactly one copy structure") {
    ParCat par(2);
    auto m = monoidal_from_products(par);
    auto ks = enumerate_comonoids(par, m);
    CHECK(ks.size() == 3);
    auto found = find_copy_structures(par, m);
    REQUIRE(found.size() == 1);
    for (int a = 0; a <= 2; ++a) {
      CHECK(found[0].copy(a) == par.diag(a));
      CHECK(found[0].counit(a) == par.to_terminal(a));
    }
    CopyView<ParCat> cv(par, m, ks);
    CHECK(check_counital_copy(cv, copy_view_monoidal(cv), copy_view_structure(cv)).passed());
  }
  SUBCASE("the unit object carries only the trivial comonoid") {
    ParCat par(1);
    auto m = monoidal_from_products(par);
    int on_unit = 0;
    for (auto& k : enumerate_comonoids(par, m))
      if (k.obj == 1) {
        ++on_unit;
        CHECK(k.delta == PartialFn::identity(1));
        CHECK(k.counit == PartialFn::identity(1));
      }
    CHECK(on_unit == 1);
  }
  SUBCASE("one-object monoids: comonoids are the units") {
    std::vector<std::pair<std::vector<std::vector<int>>, int>> cases = {
        {cyclic_add(3), 0}, {cyclic_mul(4), 1}, {{{0, 1}, {1, 1}}, 0}, {cyclic_mul(5), 1}};
    std::vector<int> expected = {3, 2, 1, 4};
    for (std::size_t i = 0; i < cases.size(); ++i) {
      auto& [mul, unit] = cases[i];
      auto mc = monoid_cat(mul, unit);
      FinView v = mc.view();
      auto m = monoid_monoidal(v, mul);
      auto ks = enumerate_comonoids(v, m);
      CHECK(static_cast<int>(ks.size()) == oracle_units(mul, unit));
      CHECK(static_cast<int>(ks.size()) == expected[i]);
      CopyView<FinView> cv(v, m, ks);
      CHECK(check_counital_copy(cv, copy_view_monoidal(cv), copy_view_structure(cv)).passed());
    }
  }
  SUBCASE("cap") {
    ParCat par(2);
    CHECK_THROWS_AS(enumerate_comonoids(par, monoidal_from_products(par), 10), CapExceeded);
  }
}

TEST_CASE("copy monads") {
  FinSetCat fs(2);
  auto m = monoidal_from_products(fs);
  auto cs = copy_from_products(fs);
  CHECK(check_counital_copy(fs, m, cs).passed());
  auto t = plus_one_monad(fs);

  SUBCASE("+1 is a copy monad and an equational lifting monad") {
    CHECK(check_copy_monad(fs, m, cs, t).passed());
    CHECK(check_equational_lifting(fs, m, cs, t).passed());
  }
  SUBCASE("φ table") {
    // (1+1)×(1+1) -> 1+1: only (point, point) is defined
    CHECK(t.phi(1, 1) == PartialFn(4, 2, {0, 1, 1, 1}));
    // (2+1)×(1+1) -> 2+1
    CHECK(t.phi(2, 1) == PartialFn(6, 3, {0, 2, 1, 2, 2, 2}));
  }
  SUBCASE("identity monad") {
    auto id = identity_monad(fs, m);
    CHECK(check_copy_monad(fs, m, cs, id).passed());
    CHECK(check_equational_lifting(fs, m, cs, id).passed());
  }
  SUBCASE("rerouting the mixed summands breaks naturality") {
    auto bad = t;
    bad.phi = [&](int a, int b) {
      auto p = detail::plus_one_phi(fs, a, b);
      // (x, ⊥) ↦ (x, 0)
      if (b > 0)
        for (int x = 0; x < a; ++x) p.t[x * (b + 1) + b] = x * b;
      return p;
    };
    CheckOptions all;
    all.all_violations = true;
    auto r = check_copy_monad(fs, m, cs, bad, all);
    CHECK_FALSE(r.passed());
    CHECK(r.has_tag("phi-natural"));
  }
  SUBCASE("lifting square at a one-point object") {
    // TA = {a, ⊥}; both sides send a to (a, a) and ⊥ to ⊥ in T(TA×A) = {(a,a),(⊥,a),⊥}
    auto lhs = fs.compose(monad_psi(fs, m, t, 2, 1), cs.copy(2));
    auto rhs = fs.compose(t.T(m.tensor(t.eta(1), fs.id(1))), t.T(cs.copy(1)));
    CHECK(lhs == PartialFn(2, 3, {0, 2}));
    CHECK(rhs == lhs);
  }
  SUBCASE("restriction through the monad matches Par") {
    KleisliPlusOne<FinSetCat> k(fs);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (auto& f : fs.hom(a, b + 1)) {
          auto r = copy_monad_restriction(fs, m, cs, t, f, b);
          CHECK(r == k.rst({f, a, b}).f);
          CHECK(r == kleisli_restriction_formula(f));
          CHECK(to_par(r, a) == par_restriction(to_par(f, b)));
        }
  }
}

TEST_CASE("Kleisli category of +1") {
  FinSetCat fs(3);
  auto kr = kleisli_restriction(fs);
  const auto& k = *kr.view;
  CHECK(kr.axioms.passed());
  CHECK(kr.coproducts.passed());
  CHECK(kr.zero.passed());
  CHECK(kr.copy.passed());
  CHECK(kr.copy.sampled);
  CHECK(kr.table.mors.size() == 144);

  SUBCASE("isomorphic to Par on the same sizes") {
    ParCat par(3);
    std::set<PartialFn> image;
    for (auto& f : kr.table.mors) image.insert(to_par(f.f, f.cod));
    CHECK(image.size() == count_morphisms(par));
    for (auto& f : kr.table.mors) {
      auto pf = to_par(f.f, f.cod);
      CHECK(to_par(k.rst(f).f, f.dom) == par.rst(pf));
      for (auto& g : out_of(k, f.cod))
        CHECK(to_par(k.compose(g, f).f, g.cod) == par.compose(to_par(g.f, g.cod), pf));
    }
    for (int a = 0; a <= 3; ++a) CHECK(to_par(k.id(a).f, a) == par.id(a));
  }
  SUBCASE("identity is the first injection, and total") {
    for (int a = 0; a <= 3; ++a) {
      CHECK(k.id(a).f == par_inl(a, 1));
      CHECK(k.rst(k.id(a)) == k.id(a));
    }
  }
  SUBCASE("the zero map is its own restriction") {
    for (int a = 0; a <= 3; ++a) {
      auto z = k.compose(k.from_initial(a), KleisliMor<FinSetCat>{PartialFn::constant(a, 1, 0), a, 0});
      CHECK(z.f == PartialFn::constant(a, a + 1, a));
      CHECK(k.rst(z) == z);
    }
  }
}

TEST_CASE("decisions in the Kleisli category") {
  FinSetCat fs(2);
  KleisliPlusOne<FinSetCat> k(fs);
  ParCat par(2);

  SUBCASE("worked example") {
    KleisliMor<FinSetCat> f{PartialFn(2, 3, {0, 2}), 2, 2};
    auto d = decision_in_kleisli(k, f, 1, 1);
    CHECK(d.h.f == PartialFn(2, 5, {0, 4}));
    CHECK(d.axioms);
    CHECK(d.matches_search);
  }
  SUBCASE("injections decide themselves") {
    for (int c = 0; c <= 2; ++c)
      for (int b = 0; b <= 2; ++b) {
        auto d = decision_in_kleisli(k, k.inl(c, b), c, b);
        CHECK(d.h == k.inl(c, c));
      }
  }
  SUBCASE("formula equals the search, and the search in Par") {
    int n = 0, expected = 0;
    // Σ over C and A+B = s of |Par(C, s)| = (s+1)^C
    for (int c = 0; c <= 2; ++c)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) expected += static_cast<int>(std::pow(a + b + 1, c));
    for (int c = 0; c <= 2; ++c)
      for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b)
          for (auto& f : k.hom(c, a + b)) {
            auto d = decision_in_kleisli(k, f, a, b);
            CHECK(d.axioms);
            CHECK(d.matches_search);
            auto p = find_decision(par, to_par(f.f, a + b), {a, b});
            REQUIRE(p);
            CHECK(to_par(d.h.f, c + c) == p->h);
            auto viacopy = copy_decision(par, to_par(f.f, a + b), a, b);
            if (viacopy) CHECK(*viacopy == p->h);
            ++n;
          }
    CHECK(n == expected);
  }
}

TEST_CASE("distributive copy categories") {
  SUBCASE("Par") {
    auto r = check_distributive_copy(ParCat(2));
    CHECK(r.report.passed());
    CHECK(r.distributive);
    CHECK(r.total_distributive);
    CHECK(r.kr_distributive);
    CHECK(r.total_kr_distributive);
    CHECK(r.extensive);
    CHECK(r.has_zero);
  }
  SUBCASE("F2-vector spaces: δ not invertible") {
    auto in = f2vect_fragment();
    auto v = in.view();
    CHECK(count_morphisms(v) == 31);
    CHECK(check_counital_copy(v, monoidal_from_products(v), copy_from_products(v)).passed());
    auto r = check_distributive_copy(v);
    CHECK_FALSE(r.report.passed());
    REQUIRE(r.report.first());
    CHECK(r.report.first()->tag == "delta-not-invertible");
    CHECK(r.report.first()->witness == std::vector<std::string>{"F2^1", "F2^0", "F2^0"});
    CHECK_FALSE(r.distributive);
    CHECK_FALSE(r.extensive);
    // 0 is a zero object, but with trivial restriction 0_AA is no restriction idempotent
    CHECK(find_zero(v).has_value());
    CHECK_FALSE(r.has_zero);
    CHECK_FALSE(r.report.has_tag("extensive-iff-distributive"));
  }
  SUBCASE("trivial category") {
    auto in = trivial_instance();
    auto r = check_distributive_copy(in.view());
    CHECK(r.report.passed());
    CHECK(r.extensive);
  }
}

TEST_CASE("distributive tables") {
  auto d = finset_dist_table(3);
  CHECK_NOTHROW(d.validate());
  CHECK(d.cat().num_morphisms() == 60);
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int c = 0; c <= 3; ++c)
        if (b + c <= 3 && a * (b + c) <= 3)
          CHECK(d.compose(d.dist_inv(a, b, c), canonical_delta(d, a, b, c)) ==
                d.id(*d.sum(*d.prod(a, b), *d.prod(a, c))));

  SUBCASE("a wrong δ⁻¹ is rejected") {
    auto table = d.dist_inv_table();
    auto key = std::make_tuple(ObjId{1}, ObjId{1}, ObjId{1});
    // swap the two points of 2
    for (auto f : d.hom(2, 2))
      if (f != d.id(2)) table[key] = f;
    DistTable bad(d.cat(), d.sums(), d.prods(), 0, 1, table);
    CHECK_THROWS_AS(bad.validate(), InvalidDistributiveData);
  }
  SUBCASE("a missing δ⁻¹ is rejected") {
    auto table = d.dist_inv_table();
    table.erase(std::make_tuple(ObjId{1}, ObjId{1}, ObjId{1}));
    DistTable bad(d.cat(), d.sums(), d.prods(), 0, 1, table);
    CHECK_THROWS_AS(bad.validate(), InvalidDistributiveData);
  }
  SUBCASE("Kleisli category of a table") {
    auto kr = kleisli_restriction(d);
    CHECK(kr.view->objects() == std::vector<ObjId>{0, 1});
    CHECK(kr.table.mors.size() == 5);
    auto comp = extensive_completion(d);
    CHECK(comp.rcat().base().num_objects() == 3);
    CHECK(comp.equivalence.passed());
  }
}

TEST_CASE("extensive completion of FinSet") {
  FinSetCat fs(2);
  auto comp = extensive_completion(fs);
  auto v = comp.view();
  CHECK(comp.extensive.passed());
  CHECK(comp.products.passed());
  CHECK(comp.functor.passed());
  CHECK(comp.preservation.passed());
  CHECK(comp.equivalence.passed());
  CHECK(comp.rcat().base().num_objects() == 7);

  const auto& kl = comp.kleisli->table;
  auto object = [&](int n, PartialFn e) {
    SplitObject<FinView> s{kl.obj_id(n), kl.mor_id(KleisliMor<FinSetCat>{e, n, n})};
    return comp.total->obj_id(comp.split->obj_id(s));
  };
  auto full2 = object(2, PartialFn(2, 3, {0, 1}));
  auto first2 = object(2, PartialFn(2, 3, {0, 2}));
  CHECK(v.hom(full2, first2).size() == 1);
  CHECK(full2 == comp.N(2));

  SUBCASE("N on the empty set is initial") { CHECK(is_initial_in_scope(v, comp.N(0))); }
  SUBCASE("(n, S) is isomorphic to (|S|, full)") {
    CHECK(comp.iso_to_image.size() == 7);
    for (auto [x, a] : comp.iso_to_image) {
      // the object's idempotent has |S| defined points
      auto sobj = comp.total->objs[static_cast<std::size_t>(x)];
      auto so = comp.split->objs[static_cast<std::size_t>(sobj)];
      auto e = kl.mors[static_cast<std::size_t>(so.e)];
      int defined = 0;
      for (int y : e.f.t) defined += y < e.cod;
      CHECK(defined == a);
    }
  }
}
