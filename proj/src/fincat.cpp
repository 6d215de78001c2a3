#include "rcat/fincat.hpp"

#include <random>

namespace rcat {

namespace {

std::string mor_label(const CategoryData& d, MorId f) {
  if (f >= 0 && static_cast<std::size_t>(f) < d.morphisms.size()) return d.morphisms[f].name;
  return "#" + std::to_string(f);
}

}  // namespace

void FinCategory::index(CategoryData& data) {
  const std::size_t n = data.objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!obj_index_.emplace(data.objects[i], static_cast<ObjId>(i)).second)
      throw MalformedTable("objects[" + std::to_string(i) + "]: duplicate name '" +
                           data.objects[i] + "'");
  }
  for (std::size_t i = 0; i < data.morphisms.size(); ++i) {
    const auto& m = data.morphisms[i];
    if (m.dom < 0 || static_cast<std::size_t>(m.dom) >= n || m.cod < 0 ||
        static_cast<std::size_t>(m.cod) >= n)
      throw MalformedTable("morphisms[" + std::to_string(i) + "] '" + m.name +
                           "': unknown dom/cod");
    if (!mor_index_.emplace(m.name, static_cast<MorId>(i)).second)
      throw MalformedTable("morphisms[" + std::to_string(i) + "]: duplicate name '" + m.name +
                           "'");
  }
  if (data.identity.size() != n) throw MalformedTable("identity: expected one entry per object");
  for (std::size_t a = 0; a < n; ++a) {
    MorId i = data.identity[a];
    if (i < 0 || static_cast<std::size_t>(i) >= data.morphisms.size())
      throw MalformedTable("identity[" + data.objects[a] + "]: unknown morphism");
    if (data.morphisms[i].dom != static_cast<ObjId>(a) ||
        data.morphisms[i].cod != static_cast<ObjId>(a))
      throw MalformedTable("identity[" + data.objects[a] + "]: '" + data.morphisms[i].name +
                           "' is not an endomorphism of it");
  }
  objects_ = std::move(data.objects);
  mors_ = std::move(data.morphisms);
  identity_ = std::move(data.identity);

  homs_.assign(n * n, {});
  hom_pos_.resize(mors_.size());
  out_.assign(n, {});
  in_.assign(n, {});
  out_pos_.resize(mors_.size());
  in_pos_.resize(mors_.size());
  for (std::size_t f = 0; f < mors_.size(); ++f) {
    auto& h = homs_[static_cast<std::size_t>(mors_[f].dom) * n + mors_[f].cod];
    hom_pos_[f] = h.size();
    h.push_back(static_cast<MorId>(f));
    out_pos_[f] = out_[mors_[f].dom].size();
    out_[mors_[f].dom].push_back(static_cast<MorId>(f));
    in_pos_[f] = in_[mors_[f].cod].size();
    in_[mors_[f].cod].push_back(static_cast<MorId>(f));
  }
  comp_.assign(n, {});
  for (std::size_t b = 0; b < n; ++b) comp_[b].assign(out_[b].size() * in_[b].size(), kNoMor);
}

FinCategory::FinCategory(CategoryData data, const Composer& compose) {
  index(data);
  for (std::size_t b = 0; b < objects_.size(); ++b) {
    const std::size_t ni = in_[b].size();
    for (std::size_t go = 0; go < out_[b].size(); ++go) {
      MorId g = out_[b][go];
      for (std::size_t fi = 0; fi < ni; ++fi) {
        MorId f = in_[b][fi];
        MorId gf = compose(g, f);
        if (gf < 0 || static_cast<std::size_t>(gf) >= mors_.size())
          throw MalformedTable("compose(" + mors_[g].name + ", " + mors_[f].name +
                               "): unknown result");
        if (mors_[gf].dom != mors_[f].dom || mors_[gf].cod != mors_[g].cod)
          throw MalformedTable("compose(" + mors_[g].name + ", " + mors_[f].name + ") = " +
                               mors_[gf].name + ": dom/cod mismatch");
        comp_[b][go * ni + fi] = gf;
      }
    }
  }
}

FinCategory::FinCategory(CategoryData data, const std::vector<std::array<MorId, 3>>& triples) {
  CategoryData copy = data;
  index(data);
  for (std::size_t t = 0; t < triples.size(); ++t) {
    auto [g, f, gf] = triples[t];
    std::string where = "compose[" + std::to_string(t) + "]";
    for (MorId m : {g, f, gf})
      if (m < 0 || static_cast<std::size_t>(m) >= mors_.size())
        throw MalformedTable(where + ": unknown morphism " + mor_label(copy, m));
    if (mors_[f].cod != mors_[g].dom)
      throw MalformedTable(where + ": " + mors_[g].name + " and " + mors_[f].name +
                           " are not composable");
    if (mors_[gf].dom != mors_[f].dom || mors_[gf].cod != mors_[g].cod)
      throw MalformedTable(where + ": result " + mors_[gf].name + " has wrong dom/cod");
    ObjId b = mors_[f].cod;
    auto& cell = comp_[b][out_pos_[g] * in_[b].size() + in_pos_[f]];
    if (cell != kNoMor)
      throw MalformedTable(where + ": duplicate entry for (" + mors_[g].name + ", " +
                           mors_[f].name + ")");
    cell = gf;
  }
  for (std::size_t b = 0; b < objects_.size(); ++b)
    for (std::size_t k = 0; k < comp_[b].size(); ++k)
      if (comp_[b][k] == kNoMor) {
        MorId g = out_[b][k / in_[b].size()], f = in_[b][k % in_[b].size()];
        throw MalformedTable("compose: missing entry for (" + mors_[g].name + ", " +
                             mors_[f].name + ")");
      }
}

MorId FinCategory::compose(MorId g, MorId f) const {
  check(g);
  check(f);
  ObjId b = mors_[f].cod;
  if (mors_[g].dom != b)
    throw ShapeMismatch("cannot compose " + mors_[g].name + " after " + mors_[f].name);
  return comp_[b][out_pos_[g] * in_[b].size() + in_pos_[f]];
}

ObjId FinCategory::find_object(const std::string& name) const {
  auto it = obj_index_.find(name);
  if (it == obj_index_.end()) throw UnknownObject("unknown object '" + name + "'");
  return it->second;
}

MorId FinCategory::find_morphism(const std::string& name) const {
  auto it = mor_index_.find(name);
  if (it == mor_index_.end()) throw UnknownMorphism("unknown morphism '" + name + "'");
  return it->second;
}

FinRCat::FinRCat(FinCategory base, std::vector<MorId> restriction)
    : base_(std::move(base)), rst_(std::move(restriction)) {
  if (rst_.size() != base_.num_morphisms())
    throw MalformedTable("restriction: expected one entry per morphism");
  for (std::size_t f = 0; f < rst_.size(); ++f) {
    MorId r = rst_[f];
    const auto& fname = base_.name(static_cast<MorId>(f));
    if (r < 0 || static_cast<std::size_t>(r) >= rst_.size())
      throw MalformedTable("restriction[" + fname + "]: unknown morphism");
    ObjId a = base_.dom(static_cast<MorId>(f));
    if (base_.dom(r) != a || base_.cod(r) != a)
      throw MalformedTable("restriction[" + fname + "] = " + base_.name(r) +
                           " is not an endomorphism of dom");
  }
}

FinRCat FinRCat::trivial(FinCategory c) {
  std::vector<MorId> r(c.num_morphisms());
  for (std::size_t f = 0; f < r.size(); ++f) r[f] = c.id(c.dom(static_cast<MorId>(f)));
  return FinRCat(std::move(c), std::move(r));
}

LawReport check_category_laws(const FinCategory& c, const CheckOptions& opts) {
  LawReport rep;
  const std::size_t n = c.num_morphisms();
  if (n > opts.cap && !opts.samples)
    return truncated(std::to_string(n) + " morphisms exceed cap " + std::to_string(opts.cap));
  for (MorId f = 0; f < static_cast<MorId>(n); ++f) {
    ++rep.checked;
    if (c.compose(c.id(c.cod(f)), f) != f &&
        rep.fail(opts, "left-identity", {c.name(f)}))
      return rep;
    if (c.compose(f, c.id(c.dom(f))) != f &&
        rep.fail(opts, "right-identity", {c.name(f)}))
      return rep;
  }
  auto assoc = [&](MorId f, MorId g, MorId h) {
    ++rep.checked;
    if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
      return rep.fail(opts, "associativity", {c.name(h), c.name(g), c.name(f)});
    return false;
  };
  if (opts.samples) {
    rep.sampled = true;
    std::mt19937_64 rng(opts.seed);
    for (std::size_t s = 0; s < *opts.samples; ++s) {
      MorId f = static_cast<MorId>(rng() % n);
      const auto& gs = c.out(c.cod(f));
      MorId g = gs[rng() % gs.size()];
      const auto& hs = c.out(c.cod(g));
      MorId h = hs[rng() % hs.size()];
      if (assoc(f, g, h)) return rep;
    }
    return rep;
  }
  for (MorId f = 0; f < static_cast<MorId>(n); ++f)
    for (MorId g : c.out(c.cod(f))) {
      MorId gf = c.compose_unchecked(g, f);
      for (MorId h : c.out(c.cod(g))) {
        if (c.compose_unchecked(h, gf) == c.compose_unchecked(c.compose_unchecked(h, g), f)) {
          ++rep.checked;
          continue;
        }
        if (assoc(f, g, h)) return rep;
      }
    }
  return rep;
}

SubCategory subcategory(const FinCategory& c, const std::function<bool(MorId)>& keep) {
  SubCategory s;
  std::vector<MorId> to_new(c.num_morphisms(), kNoMor);
  CategoryData d;
  d.objects = c.object_names();
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    if (!keep(f)) continue;
    to_new[f] = static_cast<MorId>(s.to_parent.size());
    s.to_parent.push_back(f);
    d.morphisms.push_back(c.morphism_specs()[f]);
  }
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) {
    MorId i = to_new[c.id(a)];
    if (i == kNoMor) throw AssertionFailure("subcategory misses identity of " + c.obj_name(a));
    d.identity.push_back(i);
  }
  const auto& parent = s.to_parent;
  s.cat = FinCategory(std::move(d), [&](MorId g, MorId f) {
    MorId gf = to_new[c.compose(parent[g], parent[f])];
    if (gf == kNoMor)
      throw AssertionFailure("subcategory not closed: " + c.name(parent[g]) + " . " +
                             c.name(parent[f]));
    return gf;
  });
  return s;
}

SubRCat restriction_subcategory(const FinRCat& x, const std::function<bool(MorId)>& keep) {
  auto sub = subcategory(x.base(), keep);
  std::vector<MorId> to_new(x.base().num_morphisms(), kNoMor);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
    to_new[sub.to_parent[i]] = static_cast<MorId>(i);
  std::vector<MorId> r;
  for (MorId f : sub.to_parent) {
    MorId rf = to_new[x.rst(f)];
    if (rf == kNoMor)
      throw AssertionFailure("subcategory not closed under restriction: " + x.base().name(f));
    r.push_back(rf);
  }
  return {FinRCat(std::move(sub.cat), std::move(r)), std::move(sub.to_parent)};
}

}  // namespace rcat
