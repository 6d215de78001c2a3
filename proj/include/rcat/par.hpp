#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rcat/concepts.hpp"
#include "rcat/fin_view.hpp"
#include "rcat/partial_fn.hpp"

namespace rcat {

// Par(FinSet) computed on demand.  Every size is an object; objects() is the
// scope 0..max_size used for quantified checks.
class ParCat {
 public:
  using Obj = int;
  using Mor = PartialFn;

  explicit ParCat(int max_size) : max_(max_size) {}
  int max_size() const { return max_; }

  std::vector<int> objects() const;
  std::vector<PartialFn> hom(int a, int b) const { return all_partial_fns(a, b); }
  int dom(const PartialFn& f) const { return f.src; }
  int cod(const PartialFn& f) const { return f.tgt; }
  PartialFn id(int a) const { return PartialFn::identity(a); }
  PartialFn compose(const PartialFn& g, const PartialFn& f) const { return par_compose(g, f); }
  PartialFn rst(const PartialFn& f) const { return par_restriction(f); }
  std::string name(const PartialFn& f) const { return f.name(); }
  std::string obj_name(int a) const { return std::to_string(a); }

  std::optional<int> sum(int a, int b) const { return a + b; }
  PartialFn inl(int a, int b) const { return par_inl(a, b); }
  PartialFn inr(int a, int b) const { return par_inr(a, b); }
  PartialFn copair(const PartialFn& f, const PartialFn& g) const { return par_copair(f, g); }
  std::optional<int> initial() const { return 0; }
  PartialFn from_initial(int a) const { return PartialFn::nowhere(0, a); }

  std::optional<int> prod(int a, int b) const { return a * b; }
  PartialFn proj1(int a, int b) const { return par_proj1(a, b); }
  PartialFn proj2(int a, int b) const { return par_proj2(a, b); }
  PartialFn diag(int a) const { return par_diag(a); }
  PartialFn tensor(const PartialFn& f, const PartialFn& g) const { return par_tensor(f, g); }
  std::optional<int> terminal() const { return 1; }
  PartialFn to_terminal(int a) const { return PartialFn::constant(a, 1, 0); }

  std::optional<int> ord_prod(int a, int b) const { return a + a * b + b; }
  PartialFn ord_proj1(int a, int b) const { return par_ord_proj1(a, b); }
  PartialFn ord_proj2(int a, int b) const { return par_ord_proj2(a, b); }
  PartialFn ord_pair(const PartialFn& f, const PartialFn& g) const { return par_ord_pair(f, g); }
  std::optional<int> ord_terminal() const { return 0; }
  PartialFn ord_bang(int a) const { return PartialFn::nowhere(a, 0); }

  // a restriction idempotent splits through its domain, kept in order
  std::optional<Splitting<int, PartialFn>> split(const PartialFn& e) const;

 private:
  int max_;
};

// Dense ids for Par on sizes 0..n: id = offset(a,b) + rank inside hom(a,b).
class ParIndex {
 public:
  explicit ParIndex(int n);
  int max_size() const { return n_; }
  std::size_t size() const { return total_; }
  MorId id_of(const PartialFn& f) const;
  PartialFn fn(MorId id) const;
  std::size_t offset(int a, int b) const { return offset_[a * (n_ + 1) + b]; }

 private:
  int n_;
  std::size_t total_ = 0;
  std::vector<std::size_t> offset_;
};

FinRCat par_to_rcat(int max_size, std::size_t cap = 10000);
// disjoint-union coproducts for pairs whose sum stays within max_size
CoproductStructure par_coproducts(const FinRCat& par, int max_size);
// cartesian restriction products for pairs whose product stays within max_size
ProductStructure par_products(const FinRCat& par, int max_size);

// checks hom_{D+1}(A,B) = FinSet(A, B+1) ≅ Par(A,B) preserves identities,
// composition and the Kleisli restriction <1,f>; δ⁻¹; π₁+!
LawReport kleisli_plus_one_check(int max_size, std::size_t cap = 10000);

// the Kleisli restriction of f : A -> B+1 (a total function), by the formula
PartialFn kleisli_restriction_formula(const PartialFn& f);

}  // namespace rcat
