#include "doctest.h"
#include "rcat/extensive.hpp"
#include "rcat/instances.hpp"
#include "rcat/matrix.hpp"
#include "rcat/par.hpp"
#include "support.hpp"

using namespace rcat;
using rcat::testing::Gen;

namespace {

// decision of f in Par written pointwise: x goes to copy κ when f(x) lies in B_κ
PartialFn oracle_decision(const PartialFn& f, const std::vector<int>& parts) {
  int n = f.src;
  std::vector<int> t(n, PartialFn::kUndef);
  for (int x = 0; x < n; ++x) {
    if (!f.defined(x)) continue;
    int off = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (f(x) < off + parts[k]) {
        t[x] = static_cast<int>(k) * n + x;
        break;
      }
      off += parts[k];
    }
  }
  return {n, n * static_cast<int>(parts.size()), t};
}

int offset(const std::vector<int>& parts, std::size_t k) {
  int o = 0;
  for (std::size_t i = 0; i < k; ++i) o += parts[i];
  return o;
}

// f_λκ(x) defined iff f(x) is defined and lies in B_κ
PartialFn oracle_entry(const PartialFn& f, const std::vector<int>& rows,
                       const std::vector<int>& cols, std::size_t l, std::size_t k) {
  std::vector<int> t(rows[l], PartialFn::kUndef);
  int ro = offset(rows, l), co = offset(cols, k);
  for (int x = 0; x < rows[l]; ++x) {
    int y = f(ro + x);
    if (y >= co && y < co + cols[k]) t[x] = y - co;
  }
  return {rows[l], cols[k], t};
}

int total_of(const std::vector<int>& v) { return offset(v, v.size()); }

}  // namespace

TEST_CASE("restriction coproducts") {
  ParCat par(2);
  CHECK(check_restriction_coproducts(par).passed());
  FinRCat p2 = par_to_rcat(2);
  auto cp = par_coproducts(p2, 2);
  CHECK(check_restriction_coproducts(FinView(p2, &cp)).passed());

  // an injection made partial at one point
  auto sums = cp.sums();
  ParIndex ix(2);
  sums[{2, 0}].inl = ix.id_of(PartialFn(2, 2, {0, -1}));
  CoproductStructure bad(p2.base(), sums, 0);
  auto rep = check_restriction_coproducts(FinView(p2, &bad));
  REQUIRE_FALSE(rep.passed());
  CHECK(rep.first()->tag == "injection-total");
  CHECK(rep.first()->witness[0] == "2>2:0,-");

  auto triv = trivial_instance();
  CHECK(check_restriction_coproducts(triv.view()).passed());
}

TEST_CASE("restriction zero") {
  auto rep = check_restriction_zero(ParCat(2));
  CHECK(rep.passed());
  CHECK(rep.note == "i=1 ii=1 iii=1");

  auto fs = finset_fragment(2);
  CheckOptions all;
  all.all_violations = true;
  auto bad = check_restriction_zero(fs.view(), all);
  CHECK_FALSE(bad.passed());
  CHECK(bad.note == "i=0 ii=0 iii=0");
  CHECK(bad.has_tag("zero-i"));
  CHECK(bad.has_tag("zero-ii"));
  CHECK(bad.has_tag("zero-iii"));
  CHECK_FALSE(bad.has_tag("zero-conditions-disagree"));

  CHECK(check_restriction_zero(trivial_instance().view()).passed());
}

TEST_CASE("injection_retraction") {
  ParCat par(2);
  CHECK(injection_retraction(par, 1, 1, 0) == PartialFn(2, 1, {0, -1}));
  CHECK(injection_retraction(par, 1, 1, 1) == PartialFn(2, 1, {-1, 0}));
  CHECK(injection_retraction(par, 2, 1, 0) == PartialFn(3, 2, {0, 1, -1}));
  // against 0 the retraction inverts the injection
  CHECK(injection_retraction(par, 0, 2, 1) == PartialFn::identity(2));
  CHECK(injection_retraction(par, 2, 0, 0) == PartialFn::identity(2));
  // i* agrees with the restriction inverse of the injection
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      CHECK(injection_retraction(par, a, b, 0) == *restriction_inverse(par, par_inl(a, b)));
      CHECK(injection_retraction(par, a, b, 1) == *restriction_inverse(par, par_inr(a, b)));
    }
  CHECK_THROWS_AS(injection_retraction(finset_fragment(2).view(), 1, 1, 0), NoZero);
}

TEST_CASE("find_decision examples") {
  ParCat par(3);
  // injections decide themselves
  auto i = par_inl(2, 1);
  auto d = find_decision(par, i, {2, 1});
  REQUIRE(d);
  CHECK(d->h == par_inl(2, 2));
  // a singleton coproduct: r̄f
  PartialFn g(3, 2, {1, -1, 0});
  d = find_decision(par, g, {2});
  REQUIRE(d);
  CHECK(d->h == par_restriction(g));
  // the empty coproduct: z*
  d = find_decision(par, PartialFn::nowhere(2, 0), {});
  REQUIRE(d);
  CHECK(d->h == PartialFn::nowhere(2, 0));
  // C = {0,1,2}, A = B = {0}
  PartialFn f(3, 2, {0, 1, -1});
  d = find_decision(par, f, {1, 1});
  REQUIRE(d);
  CHECK(d->h == PartialFn(3, 6, {0, 4, -1}));
  CHECK(d->unique);
  CHECK(d->characterizations_agree);
  CHECK(d->d2_checked);
}

TEST_CASE("decisions in Par match the pointwise oracle") {
  ParCat par(2);
  for (int c = 0; c <= 2; ++c)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (auto& f : all_partial_fns(c, a + b)) {
          auto d = find_decision(par, f, {a, b});
          REQUIRE(d);
          CHECK(d->unique);
          CHECK(d->characterizations_agree);
          CHECK(d->h == oracle_decision(f, {a, b}));
        }
}

TEST_CASE("decision_from_binary") {
  ParCat par(3);
  PartialFn g(2, 3, {2, -1});
  CHECK(decision_from_binary(par, g, {3}) == par_restriction(g));
  PartialFn f(3, 3, {2, 0, 1});
  CHECK(decision_from_binary(par, f, {1, 1, 1}) == oracle_decision(f, {1, 1, 1}));
  CHECK(decision_from_binary(par, f, {1, 2}) == find_decision(par, f, {1, 2})->h);
  Gen gen(3);
  for (int n = 0; n < 200; ++n) {
    std::vector<int> parts{gen.size(1), gen.size(1), gen.size(1)};
    int c = gen.size(2);
    auto h = gen.partial(c, total_of(parts));
    auto d = find_decision(par, h, {parts[0], parts[1], parts[2]});
    REQUIRE(d);
    CHECK(d->unique);
    CHECK(decision_from_binary(par, h, {parts[0], parts[1], parts[2]}) == d->h);
  }
}

TEST_CASE("r̄(i*_κ f) is the partial identity on the preimage of B_κ") {
  ParCat par(2);
  auto zw = need_zero(par);
  for (int c = 0; c <= 2; ++c)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        auto s = need_nsum(par, {a, b});
        for (auto& f : all_partial_fns(c, a + b))
          for (std::size_t k = 0; k < 2; ++k) {
            std::vector<int> t(c, PartialFn::kUndef);
            for (int x = 0; x < c; ++x)
              if (f.defined(x) && (k == 0 ? f(x) < a : f(x) >= a)) t[x] = x;
            CHECK(par.rst(par.compose(retraction(par, zw, s, k), f)) == PartialFn(c, c, t));
          }
      }
}

TEST_CASE("decisions are their own decisions; conjugation") {
  ParCat par(2);
  for (int a = 0; a <= 2; ++a) {
    auto hs = binary_decisions(par, a);
    // in Par every map A -> A+A that copies points into either copy is a decision
    std::size_t expected = 1;
    for (int x = 0; x < a; ++x) expected *= 3;
    CHECK(hs.size() == expected);
    for (auto& h : hs) CHECK(is_decision(par, h, 2));
    for (int b = 0; b <= 2; ++b)
      for (auto& f : all_partial_fns(a, b)) {
        auto g = restriction_inverse(par, f);
        if (!g) continue;
        for (auto& h : hs) {
          auto k = conjugate_decision(par, h, f, *g, 2);
          CHECK(is_decision(par, k, 2));
          CHECK(par.rst(k) == par.rst(par.compose(h, *g)));
        }
      }
  }
}

TEST_CASE("decision on a sum factors through its components") {
  ParCat par(2);
  for (int a1 = 0; a1 <= 1; ++a1)
    for (int a2 = 0; a2 <= 2; ++a2)
      for (auto& h : binary_decisions(par, a1 + a2)) {
        auto [ks, ok] = decision_on_sum(par, h, {a1, a2}, 2);
        CHECK(ok);
        for (auto& k : ks) CHECK(is_decision(par, k, 2));
      }
}

TEST_CASE("adding decisions") {
  ParCat par(2);
  Gen gen(9);
  for (int n = 0; n < 300; ++n) {
    int a = gen.size(2), a2 = gen.size(1), b = gen.size(1), c = gen.size(1), b2 = gen.size(1),
        c2 = gen.size(1);
    auto f = gen.partial(a, b + c), f2 = gen.partial(a2, b2 + c2);
    auto h = find_decision(par, f, {b, c})->h;
    auto h2 = find_decision(par, f2, {b2, c2})->h;
    auto swap = middle_swap(par, b, c, b2, c2);
    auto sum = par_plus(f, f2);
    auto target = par.compose(swap, sum);
    auto expected = par.compose(middle_swap(par, a, a, a2, a2), par_plus(h, h2));
    auto d = find_decision(par, target, {b + b2, c + c2});
    REQUIRE(d);
    CHECK(d->h == expected);
  }
}

TEST_CASE("matrix_decompose") {
  ParCat par(4);
  // identity on A+B: diagonal identities, zero elsewhere
  auto m = matrix_decompose(par, PartialFn::identity(3), {1, 2}, {1, 2});
  CHECK(m.entries[0][0] == PartialFn::identity(1));
  CHECK(m.entries[1][1] == PartialFn::identity(2));
  CHECK(m.entries[0][1] == PartialFn::nowhere(1, 2));
  CHECK(m.entries[1][0] == PartialFn::nowhere(2, 1));
  // A1's point goes to B2's point, A2 undefined
  PartialFn f(2, 2, {1, -1});
  m = matrix_decompose(par, f, {1, 1}, {1, 1});
  CHECK(m.entries[0][1] == PartialFn::identity(1));
  CHECK(m.entries[0][0] == PartialFn::nowhere(1, 1));
  CHECK(m.entries[1][0] == PartialFn::nowhere(1, 1));
  CHECK(m.entries[1][1] == PartialFn::nowhere(1, 1));
  CHECK(matrix_recompose(par, m) == f);
  // nowhere defined
  m = matrix_decompose(par, PartialFn::nowhere(3, 2), {2, 1}, {1, 1});
  for (auto& row : m.entries)
    for (auto& e : row) CHECK(e == PartialFn::nowhere(e.src, e.tgt));
}

TEST_CASE("matrix entries match the pointwise rule") {
  ParCat par(4);
  Gen gen(21);
  for (int n = 0; n < 500; ++n) {
    std::vector<int> rows{gen.size(2), gen.size(2)}, cols{gen.size(2), gen.size(2)};
    auto f = gen.partial(total_of(rows), total_of(cols));
    auto m = matrix_decompose(par, f, rows, cols);
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t k = 0; k < 2; ++k)
        CHECK(m.entries[l][k] == oracle_entry(f, rows, cols, l, k));
    CHECK(matrix_recompose(par, m) == f);
  }
}

TEST_CASE("matrix_recompose") {
  ParCat par(3);
  auto id = matrix_decompose(par, PartialFn::identity(3), {2, 1}, {2, 1});
  CHECK(matrix_recompose(par, id) == PartialFn::identity(3));
  PartialFn g(2, 3, {2, -1});
  auto one = matrix_decompose(par, g, {2}, {3});
  CHECK(one.entries[0][0] == g);
  CHECK(matrix_recompose(par, one) == g);
  auto bad = one;
  bad.witness[0] = PartialFn::identity(2);
  CHECK_THROWS_AS(matrix_recompose(par, bad), InvalidWitness);
}

TEST_CASE("matrix_multiply") {
  ParCat par(4);
  PartialFn f(2, 2, {0, 1});
  auto mf = matrix_decompose(par, f, {1, 1}, {1, 1});
  auto id = matrix_decompose(par, PartialFn::identity(2), {1, 1}, {1, 1});
  CHECK(matrix_multiply(par, id, mf) == mf);
  CHECK(matrix_multiply(par, mf, id) == mf);
  // K = {1,2}: f11 defined, f12 undefined, g11 and g21 defined
  PartialFn f2(1, 2, {0});
  PartialFn g2(2, 1, {0, 0});
  auto m = matrix_multiply(par, matrix_decompose(par, g2, {1, 1}, {1}),
                           matrix_decompose(par, f2, {1}, {1, 1}));
  CHECK(m.entries[0][0] == par_compose(g2, f2));
  CHECK(m.entries[0][0] == PartialFn::identity(1));
  // a zero row in G gives a zero row in the product
  PartialFn gz(2, 2, {-1, 1});
  auto mz = matrix_multiply(par, matrix_decompose(par, gz, {1, 1}, {1, 1}), mf);
  CHECK(mz.entries[0][0] == PartialFn::nowhere(1, 1));
  CHECK(mz.entries[0][1] == PartialFn::nowhere(1, 1));
  CHECK_THROWS_AS(matrix_multiply(par, matrix_decompose(par, f2, {1}, {1, 1}), mf),
                  ShapeMismatch);

  Gen gen(13);
  for (int n = 0; n < 300; ++n) {
    std::vector<int> r{gen.size(2), gen.size(2)}, k{gen.size(2), gen.size(2)},
        u{gen.size(2), gen.size(2)};
    auto a = gen.partial(total_of(r), total_of(k)), b = gen.partial(total_of(k), total_of(u));
    auto prod = matrix_multiply(par, matrix_decompose(par, b, k, u), matrix_decompose(par, a, r, k));
    CHECK(prod == matrix_decompose(par, par_compose(b, a), r, u));
  }
}

TEST_CASE("the truncated counterexample") {
  auto cx = truncated_counterexample();
  auto v = cx.inst.view();
  const auto& c = cx.inst.x.base();
  CHECK(c.num_morphisms() == 1623);
  CHECK(c.name(cx.f) == "C>2:0,0,1");
  CHECK(check_category_laws(c).passed());
  CHECK(check_restriction_axioms(v).passed());
  CHECK(check_restriction_coproducts(v).passed());
  CHECK(check_restriction_zero(v).passed());
  CHECK_FALSE(find_decision(v, cx.f, {1, 1}));

  auto rep = is_extensive_rcat(v);
  REQUIRE_FALSE(rep.passed());
  CHECK(rep.first()->tag == "no-decision");
  CHECK(rep.first()->witness[0] == "C>2:0,0,1");

  auto verdict = is_extensive_map(v, cx.f);
  CHECK_FALSE(verdict.extensive);
  REQUIRE(verdict.witness);
  CHECK(is_decision(v, *verdict.witness, 2));

  auto ex = extensive_subcategory(cx.inst.x, cx.inst.cp);
  CHECK(ex.closure.passed());
  CHECK(ex.rcat.base().num_morphisms() < c.num_morphisms());
  CHECK(std::find(ex.non_extensive.begin(), ex.non_extensive.end(), cx.f) !=
        ex.non_extensive.end());
  CHECK(check_restriction_axioms(FinView(ex.rcat)).passed());
}

TEST_CASE("extensive maps and Ex(X)") {
  FinRCat p2 = par_to_rcat(2);
  auto cp = par_coproducts(p2, 2);
  FinView v(p2, &cp);
  // idempotents and injections are extensive
  for (ObjId a = 0; a <= 2; ++a)
    for (MorId e : restriction_idempotents(v, a)) CHECK(is_extensive_map(v, e).extensive);
  for (auto& [ab, s] : cp.sums()) {
    CHECK(is_extensive_map(v, s.inl).extensive);
    CHECK(is_extensive_map(v, s.inr).extensive);
  }
  auto ex = extensive_subcategory(p2, cp);
  CHECK(ex.non_extensive.empty());
  CHECK(ex.rcat.base().num_morphisms() == p2.base().num_morphisms());
  CHECK(ex.closure.passed());

  auto triv = trivial_instance();
  auto ext = extensive_subcategory(triv.x, triv.cp);
  CHECK(ext.rcat.base().num_morphisms() == 1);
}

TEST_CASE("is_extensive_rcat") {
  CHECK(is_extensive_rcat(ParCat(2)).passed());
  auto fs = finset_fragment(2);
  auto rep = is_extensive_rcat(fs.view());
  REQUIRE_FALSE(rep.passed());
  CHECK(rep.first()->tag == "zero-i");
  CHECK(is_extensive_rcat(trivial_instance().view()).passed());
}
