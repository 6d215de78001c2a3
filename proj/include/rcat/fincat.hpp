#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rcat/errors.hpp"
#include "rcat/report.hpp"

namespace rcat {

using ObjId = std::int32_t;
using MorId = std::int32_t;
constexpr MorId kNoMor = -1;

struct MorSpec {
  std::string name;
  ObjId dom = 0;
  ObjId cod = 0;
};

struct CategoryData {
  std::vector<std::string> objects;
  std::vector<MorSpec> morphisms;
  std::vector<MorId> identity;  // indexed by object
};

// Finite category stored as dense tables.  Composition is kept per middle
// object B as a |out(B)| x |in(B)| block, so memory is the number of
// composable pairs and lookup is still two array reads.
class FinCategory {
 public:
  using Composer = std::function<MorId(MorId g, MorId f)>;

  FinCategory() = default;
  // composition supplied as a function over composable pairs
  FinCategory(CategoryData data, const Composer& compose);
  // composition supplied as [g, f, gf] triples covering every composable pair
  FinCategory(CategoryData data, const std::vector<std::array<MorId, 3>>& triples);

  std::size_t num_objects() const { return objects_.size(); }
  std::size_t num_morphisms() const { return mors_.size(); }

  ObjId dom(MorId f) const { return mors_[check(f)].dom; }
  ObjId cod(MorId f) const { return mors_[check(f)].cod; }
  MorId id(ObjId a) const { return identity_[check_obj(a)]; }
  MorId compose(MorId g, MorId f) const;
  // no bounds or type checks; for inner loops over known-composable pairs
  MorId compose_unchecked(MorId g, MorId f) const {
    ObjId b = mors_[f].cod;
    return comp_[b][out_pos_[g] * in_[b].size() + in_pos_[f]];
  }
  bool composable(MorId g, MorId f) const { return cod(f) == dom(g); }

  const std::vector<MorId>& hom(ObjId a, ObjId b) const {
    return homs_[static_cast<std::size_t>(check_obj(a)) * objects_.size() + check_obj(b)];
  }
  // position of f inside hom(dom f, cod f)
  std::size_t hom_index(MorId f) const { return hom_pos_[check(f)]; }
  const std::vector<MorId>& out(ObjId a) const { return out_[check_obj(a)]; }
  const std::vector<MorId>& in(ObjId b) const { return in_[check_obj(b)]; }

  const std::string& name(MorId f) const { return mors_[check(f)].name; }
  const std::string& obj_name(ObjId a) const { return objects_[check_obj(a)]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<MorSpec>& morphism_specs() const { return mors_; }

  ObjId find_object(const std::string& name) const;
  MorId find_morphism(const std::string& name) const;
  bool has_morphism(const std::string& name) const { return mor_index_.count(name) != 0; }

  MorId check(MorId f) const {
    if (f < 0 || static_cast<std::size_t>(f) >= mors_.size())
      throw UnknownMorphism("unknown morphism id " + std::to_string(f));
    return f;
  }
  ObjId check_obj(ObjId a) const {
    if (a < 0 || static_cast<std::size_t>(a) >= objects_.size())
      throw UnknownObject("unknown object id " + std::to_string(a));
    return a;
  }

 private:
  void index(CategoryData& data);

  std::vector<std::string> objects_;
  std::vector<MorSpec> mors_;
  std::vector<MorId> identity_;
  std::vector<std::vector<MorId>> homs_;
  std::vector<std::size_t> hom_pos_;
  std::vector<std::vector<MorId>> out_, in_;
  std::vector<std::size_t> out_pos_, in_pos_;
  std::vector<std::vector<MorId>> comp_;  // per middle object
  std::unordered_map<std::string, MorId> mor_index_;
  std::unordered_map<std::string, ObjId> obj_index_;
};

class FinRCat {
 public:
  FinRCat() = default;
  FinRCat(FinCategory base, std::vector<MorId> restriction);

  const FinCategory& base() const { return base_; }
  MorId rst(MorId f) const { return rst_[base_.check(f)]; }
  const std::vector<MorId>& restriction_table() const { return rst_; }

  // trivial restriction: every r̄f is the identity
  static FinRCat trivial(FinCategory c);

 private:
  FinCategory base_;
  std::vector<MorId> rst_;
};

LawReport check_category_laws(const FinCategory& c, const CheckOptions& opts = {});

// sub-table of c on the morphisms selected by keep; throws AssertionFailure if the
// selection is not closed under composition or misses an identity
struct SubCategory {
  FinCategory cat;
  std::vector<MorId> to_parent;  // new id -> parent id
};
SubCategory subcategory(const FinCategory& c, const std::function<bool(MorId)>& keep);

// the same for a restriction category; the selection must also be closed under r̄
struct SubRCat {
  FinRCat rcat;
  std::vector<MorId> to_parent;
};
SubRCat restriction_subcategory(const FinRCat& x, const std::function<bool(MorId)>& keep);

}  // namespace rcat
