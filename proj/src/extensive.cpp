#include "rcat/extensive.hpp"

namespace rcat {

ExtensiveSubcategory extensive_subcategory(const FinRCat& x, const CoproductStructure& cp,
                                           const CheckOptions& o) {
  FinView v(x, &cp);
  const FinCategory& c = x.base();
  std::vector<char> ext(c.num_morphisms());
  ExtensiveSubcategory out;
  std::vector<char> open(c.num_morphisms());
  const auto n = static_cast<MorId>(c.num_morphisms());
  for (MorId f = 0; f < n; ++f) {
    auto verdict = is_extensive_map(v, f);
    ext[f] = verdict.extensive;
    open[f] = !verdict.determined;
    if (open[f]) out.undetermined.push_back(f);
  }
  // settle undetermined maps by closure under composition and restriction
  for (bool changed = true; changed;) {
    changed = false;
    auto settle = [&](MorId f) {
      if (open[f] && ext[f]) ext[f] = 0, changed = true;
    };
    for (MorId f = 0; f < n; ++f) {
      if (!ext[f]) continue;
      if (!ext[x.rst(f)]) settle(f);
      for (MorId g : c.out(c.cod(f))) {
        if (!ext[g] || ext[c.compose(g, f)]) continue;
        if (open[g] && !open[f]) settle(g);
        else if (open[f] && !open[g]) settle(f);
      }
    }
  }
  for (MorId f = 0; f < n; ++f)
    if (!ext[f]) out.non_extensive.push_back(f);
  LawReport& rep = out.closure;
  for (MorId f = 0; f < static_cast<MorId>(c.num_morphisms()); ++f) {
    if (!ext[f]) continue;
    ++rep.checked;
    if (!ext[x.rst(f)] && rep.fail(o, "restriction-not-closed", {c.name(f)})) break;
    for (MorId g : c.out(c.cod(f)))
      if (ext[g] && !ext[c.compose(g, f)] &&
          rep.fail(o, "composition-not-closed", {c.name(g), c.name(f)}))
        break;
  }
  for (auto& [ab, s] : cp.sums()) {
    for (ObjId a2 = 0; a2 < static_cast<ObjId>(c.num_objects()); ++a2)
      for (ObjId b2 = 0; b2 < static_cast<ObjId>(c.num_objects()); ++b2) {
        auto s2 = cp.find(a2, b2);
        if (!s2) continue;
        for (MorId f : c.hom(ab.first, a2))
          for (MorId g : c.hom(ab.second, b2)) {
            if (!ext[f] || !ext[g]) continue;
            MorId fg = v.copair(c.compose(s2->inl, f), c.compose(s2->inr, g));
            // a verdict forced by truncation cannot refute closure
            if (open[f] || open[g] || open[fg]) continue;
            ++rep.checked;
            if (!ext[fg]) rep.fail(o, "sum-not-closed", {c.name(f), c.name(g)});
          }
      }
    if (ab.first == ab.second) {
      MorId nab = v.copair(c.id(ab.first), c.id(ab.first));
      if (!open[nab] && !ext[nab]) rep.fail(o, "codiagonal-not-extensive", {c.name(nab)});
    }
  }
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a)
    for (MorId h : binary_decisions(v, a))
      if (!open[h] && !ext[h]) rep.fail(o, "decision-not-extensive", {c.name(h)});
  auto sub = restriction_subcategory(x, [&](MorId f) { return ext[f] != 0; });
  out.rcat = std::move(sub.rcat);
  out.to_parent = std::move(sub.to_parent);
  return out;
}

}  // namespace rcat
