#pragma once

// Distributive categories: chosen finite products and coproducts, and the
// inverse δ⁻¹ : A×(B+C) -> A×B + A×C of the canonical map.  FinSetCat
// computes everything on demand; DistTable holds a finite table with
// explicit δ⁻¹ entries.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rcat/concepts.hpp"
#include "rcat/fincat.hpp"
#include "rcat/partial_fn.hpp"

namespace rcat {

template <class D>
concept DistributiveCategory =
    Category<D> && requires(const D& d, const typename D::Obj& a, const typename D::Mor& f) {
      { d.sum(a, a) } -> std::same_as<std::optional<typename D::Obj>>;
      { d.inl(a, a) } -> std::convertible_to<typename D::Mor>;
      { d.inr(a, a) } -> std::convertible_to<typename D::Mor>;
      { d.copair(f, f) } -> std::convertible_to<typename D::Mor>;
      { d.initial() } -> std::same_as<std::optional<typename D::Obj>>;
      { d.from_initial(a) } -> std::convertible_to<typename D::Mor>;
      { d.prod(a, a) } -> std::same_as<std::optional<typename D::Obj>>;
      { d.proj1(a, a) } -> std::convertible_to<typename D::Mor>;
      { d.proj2(a, a) } -> std::convertible_to<typename D::Mor>;
      { d.pair(f, f) } -> std::convertible_to<typename D::Mor>;
      { d.terminal() } -> std::same_as<std::optional<typename D::Obj>>;
      { d.to_terminal(a) } -> std::convertible_to<typename D::Mor>;
      { d.dist_inv(a, a, a) } -> std::convertible_to<typename D::Mor>;
    };

// total functions A -> B
std::vector<PartialFn> all_total_fns(int a, int b);

// FinSet skeleton on sizes 0..max_size (the scope), with strict a×b indexed
// x·|B|+y and a+b listing A first; composites may leave the scope.  Trivial
// restriction, so it is also a restriction category with restriction products.
class FinSetCat {
 public:
  using Obj = int;
  using Mor = PartialFn;

  explicit FinSetCat(int max_size) : max_(max_size) {}
  int max_size() const { return max_; }

  std::vector<int> objects() const;
  std::vector<PartialFn> hom(int a, int b) const { return all_total_fns(a, b); }
  int dom(const PartialFn& f) const { return f.src; }
  int cod(const PartialFn& f) const { return f.tgt; }
  PartialFn id(int a) const { return PartialFn::identity(a); }
  PartialFn compose(const PartialFn& g, const PartialFn& f) const { return par_compose(g, f); }
  PartialFn rst(const PartialFn& f) const { return PartialFn::identity(f.src); }
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
  PartialFn pair(const PartialFn& f, const PartialFn& g) const;
  PartialFn diag(int a) const { return par_diag(a); }
  PartialFn tensor(const PartialFn& f, const PartialFn& g) const { return par_tensor(f, g); }
  std::optional<int> terminal() const { return 1; }
  PartialFn to_terminal(int a) const { return PartialFn::constant(a, 1, 0); }

  // A×(B+C) -> A×B + A×C
  PartialFn dist_inv(int a, int b, int c) const;

 private:
  int max_;
};

// A finite category with chosen products, coproducts, terminal, initial and
// explicit δ⁻¹ tables.  Pairings and copairings are found by scanning homs;
// validate() checks every universal property and that δ⁻¹ inverts δ.
class DistTable {
 public:
  using Obj = ObjId;
  using Mor = MorId;

  struct Cocone {
    ObjId obj;
    MorId i, j;
  };

  DistTable(FinCategory c, std::map<std::pair<ObjId, ObjId>, Cocone> sums,
            std::map<std::pair<ObjId, ObjId>, Cocone> prods, std::optional<ObjId> initial,
            std::optional<ObjId> terminal, std::map<std::tuple<ObjId, ObjId, ObjId>, MorId> dist_inv);

  const FinCategory& cat() const { return c_; }
  const std::map<std::pair<ObjId, ObjId>, Cocone>& sums() const { return sums_; }
  const std::map<std::pair<ObjId, ObjId>, Cocone>& prods() const { return prods_; }
  const std::map<std::tuple<ObjId, ObjId, ObjId>, MorId>& dist_inv_table() const { return dinv_; }

  const std::vector<ObjId>& objects() const { return objs_; }
  const std::vector<MorId>& hom(ObjId a, ObjId b) const { return c_.hom(a, b); }
  ObjId dom(MorId f) const { return c_.dom(f); }
  ObjId cod(MorId f) const { return c_.cod(f); }
  MorId id(ObjId a) const { return c_.id(a); }
  MorId compose(MorId g, MorId f) const { return c_.compose(g, f); }
  MorId rst(MorId f) const { return c_.id(c_.dom(f)); }
  std::string name(MorId f) const { return c_.name(f); }
  std::string obj_name(ObjId a) const { return c_.obj_name(a); }

  std::optional<ObjId> sum(ObjId a, ObjId b) const;
  MorId inl(ObjId a, ObjId b) const;
  MorId inr(ObjId a, ObjId b) const;
  MorId copair(MorId f, MorId g) const;
  std::optional<ObjId> initial() const { return initial_; }
  MorId from_initial(ObjId a) const;

  std::optional<ObjId> prod(ObjId a, ObjId b) const;
  MorId proj1(ObjId a, ObjId b) const;
  MorId proj2(ObjId a, ObjId b) const;
  MorId pair(MorId f, MorId g) const;
  MorId diag(ObjId a) const { return pair(id(a), id(a)); }
  MorId tensor(MorId f, MorId g) const;
  std::optional<ObjId> terminal() const { return terminal_; }
  MorId to_terminal(ObjId a) const;

  MorId dist_inv(ObjId a, ObjId b, ObjId c) const;

  // universal properties of every chosen (co)product, initial and terminal
  // objects, and δ⁻¹ two-sided inverse to δ; throws InvalidDistributiveData
  void validate() const;

 private:
  const Cocone& need_sum(ObjId a, ObjId b) const;
  const Cocone& need_prod(ObjId a, ObjId b) const;

  FinCategory c_;
  std::map<std::pair<ObjId, ObjId>, Cocone> sums_, prods_;
  std::optional<ObjId> initial_, terminal_;
  std::map<std::tuple<ObjId, ObjId, ObjId>, MorId> dinv_;
  std::vector<ObjId> objs_;
};

// δ = [1×i, 1×j] : A×B + A×C -> A×(B+C) in a category with pairings
template <DistributiveCategory D>
MorOf<D> canonical_delta(const D& d, const ObjOf<D>& a, const ObjOf<D>& b, const ObjOf<D>& c) {
  auto left = d.pair(d.proj1(a, b), d.compose(d.inl(b, c), d.proj2(a, b)));
  auto right = d.pair(d.proj1(a, c), d.compose(d.inr(b, c), d.proj2(a, c)));
  return d.copair(left, right);
}

// the FinSet skeleton on sizes 0..n as a table, with every product, sum and
// δ⁻¹ that stays within n
DistTable finset_dist_table(int n);

}  // namespace rcat
