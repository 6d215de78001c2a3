#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <utility>

#include "rcat/concepts.hpp"
#include "rcat/fincat.hpp"

namespace rcat {

// Chosen coproducts on a finite table, for the pairs that have them.  The
// copair table is derived by scanning hom(A+B, D) for (h·i, h·j).
class CoproductStructure {
 public:
  struct Sum {
    ObjId sum;
    MorId inl, inr;
  };

  CoproductStructure() = default;
  CoproductStructure(const FinCategory& c, std::map<std::pair<ObjId, ObjId>, Sum> sums,
                     std::optional<ObjId> initial);

  const std::map<std::pair<ObjId, ObjId>, Sum>& sums() const { return sums_; }
  const Sum* find(ObjId a, ObjId b) const {
    auto it = sums_.find({a, b});
    return it == sums_.end() ? nullptr : &it->second;
  }
  std::optional<ObjId> initial() const { return initial_; }

  // unique h with h·i = f, h·j = g, or kNoMor
  MorId copair(const FinCategory& c, MorId f, MorId g) const;
  // universal property: the scan is a bijection for every pair and target,
  // and hom(0, A) is a singleton
  LawReport verify(const FinCategory& c, const CheckOptions& o = {}) const;

 private:
  std::map<std::pair<ObjId, ObjId>, Sum> sums_;
  std::optional<ObjId> initial_;
  // (A, B, D) -> cell per (hom_index f, hom_index g); kNoMor missing, -2 ambiguous
  std::map<std::tuple<ObjId, ObjId, ObjId>, std::vector<MorId>> table_;
};

// Restriction products on a finite table.  Δ and f×g are stored explicitly;
// from_projections derives them by search as restriction pairings.
struct ProductStructure {
  struct Prod {
    ObjId prod;
    MorId p, q;
  };
  std::map<std::pair<ObjId, ObjId>, Prod> prods;
  std::map<ObjId, MorId> diag;
  std::map<std::pair<MorId, MorId>, MorId> tensor;
  std::optional<ObjId> terminal;
  std::map<ObjId, MorId> to_terminal;

  const Prod* find(ObjId a, ObjId b) const {
    auto it = prods.find({a, b});
    return it == prods.end() ? nullptr : &it->second;
  }
  static ProductStructure from_projections(const FinRCat& x,
                                           std::map<std::pair<ObjId, ObjId>, Prod> prods,
                                           std::optional<ObjId> terminal);
};

// Adapter giving a FinCategory / FinRCat the generic interface.  Without a
// restriction table every map is total.
class FinView {
 public:
  using Obj = ObjId;
  using Mor = MorId;

  explicit FinView(const FinCategory& c, const CoproductStructure* cp = nullptr,
                   const ProductStructure* rp = nullptr);
  explicit FinView(const FinRCat& x, const CoproductStructure* cp = nullptr,
                   const ProductStructure* rp = nullptr);

  const FinCategory& cat() const { return *c_; }
  const CoproductStructure* coproducts() const { return cp_; }
  const ProductStructure* products() const { return rp_; }

  const std::vector<ObjId>& objects() const { return objs_; }
  const std::vector<MorId>& hom(ObjId a, ObjId b) const { return c_->hom(a, b); }
  ObjId dom(MorId f) const { return c_->dom(f); }
  ObjId cod(MorId f) const { return c_->cod(f); }
  MorId id(ObjId a) const { return c_->id(a); }
  MorId compose(MorId g, MorId f) const { return c_->compose(g, f); }
  MorId rst(MorId f) const { return rst_ ? (*rst_)[c_->check(f)] : c_->id(c_->dom(f)); }
  std::string name(MorId f) const { return c_->name(f); }
  std::string obj_name(ObjId a) const { return c_->obj_name(a); }

  std::optional<ObjId> sum(ObjId a, ObjId b) const;
  MorId inl(ObjId a, ObjId b) const;
  MorId inr(ObjId a, ObjId b) const;
  MorId copair(MorId f, MorId g) const;
  std::optional<ObjId> initial() const;
  MorId from_initial(ObjId a) const;

  std::optional<ObjId> prod(ObjId a, ObjId b) const;
  MorId proj1(ObjId a, ObjId b) const;
  MorId proj2(ObjId a, ObjId b) const;
  MorId diag(ObjId a) const;
  MorId tensor(MorId f, MorId g) const;
  std::optional<ObjId> terminal() const;
  MorId to_terminal(ObjId a) const;

 private:
  const CoproductStructure::Sum& need_sum(ObjId a, ObjId b) const;
  const ProductStructure::Prod& need_prod(ObjId a, ObjId b) const;

  const FinCategory* c_;
  const std::vector<MorId>* rst_ = nullptr;
  const CoproductStructure* cp_;
  const ProductStructure* rp_;
  std::vector<ObjId> objs_;
};

}  // namespace rcat
