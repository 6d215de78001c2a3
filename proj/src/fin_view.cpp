#include "rcat/fin_view.hpp"

namespace rcat {

CoproductStructure::CoproductStructure(const FinCategory& c,
                                       std::map<std::pair<ObjId, ObjId>, Sum> sums,
                                       std::optional<ObjId> initial)
    : sums_(std::move(sums)), initial_(initial) {
  for (auto& [ab, s] : sums_) {
    auto [a, b] = ab;
    c.check_obj(a);
    c.check_obj(b);
    c.check_obj(s.sum);
    if (c.dom(s.inl) != a || c.cod(s.inl) != s.sum || c.dom(s.inr) != b ||
        c.cod(s.inr) != s.sum)
      throw StructureError("coproduct " + c.obj_name(a) + "+" + c.obj_name(b) +
                           ": injections have the wrong shape");
    for (ObjId d = 0; d < static_cast<ObjId>(c.num_objects()); ++d) {
      const auto& fa = c.hom(a, d);
      const auto& gb = c.hom(b, d);
      std::vector<MorId> cells(fa.size() * gb.size(), kNoMor);
      for (MorId h : c.hom(s.sum, d)) {
        auto& cell = cells[c.hom_index(c.compose(h, s.inl)) * gb.size() +
                           c.hom_index(c.compose(h, s.inr))];
        cell = cell == kNoMor ? h : -2;
      }
      table_.emplace(std::make_tuple(a, b, d), std::move(cells));
    }
  }
  if (initial_) c.check_obj(*initial_);
}

MorId CoproductStructure::copair(const FinCategory& c, MorId f, MorId g) const {
  if (c.cod(f) != c.cod(g))
    throw NotParallel("copair: " + c.name(f) + " and " + c.name(g) + " have different codomains");
  auto it = table_.find({c.dom(f), c.dom(g), c.cod(f)});
  if (it == table_.end())
    throw StructureError("no chosen coproduct " + c.obj_name(c.dom(f)) + "+" +
                         c.obj_name(c.dom(g)));
  MorId h = it->second[c.hom_index(f) * c.hom(c.dom(g), c.cod(g)).size() + c.hom_index(g)];
  return h < 0 ? kNoMor : h;
}

LawReport CoproductStructure::verify(const FinCategory& c, const CheckOptions& o) const {
  LawReport rep;
  for (auto& [key, cells] : table_) {
    auto [a, b, d] = key;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      ++rep.checked;
      if (cells[k] >= 0) continue;
      std::size_t nb = c.hom(b, d).size();
      MorId f = c.hom(a, d)[k / nb], g = c.hom(b, d)[k % nb];
      if (rep.fail(o, cells[k] == kNoMor ? "copair-missing" : "copair-not-unique",
                   {c.obj_name(a), c.obj_name(b), c.name(f), c.name(g)}))
        return rep;
    }
  }
  if (initial_) {
    for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) {
      ++rep.checked;
      if (c.hom(*initial_, a).size() != 1 &&
          rep.fail(o, "initial-not-unique", {c.obj_name(*initial_), c.obj_name(a)}))
        return rep;
    }
  }
  return rep;
}

ProductStructure ProductStructure::from_projections(
    const FinRCat& x, std::map<std::pair<ObjId, ObjId>, Prod> prods,
    std::optional<ObjId> terminal) {
  const auto& c = x.base();
  ProductStructure s;
  s.prods = std::move(prods);
  s.terminal = terminal;
  // restriction pairing <u,v>: p h = u r̄v, q h = v r̄u, r̄h = r̄u r̄v
  auto pair = [&](MorId u, MorId v, const Prod& pr) -> MorId {
    MorId found = kNoMor;
    MorId want_p = c.compose(u, x.rst(v)), want_q = c.compose(v, x.rst(u));
    MorId want_r = c.compose(x.rst(u), x.rst(v));
    for (MorId h : c.hom(c.dom(u), pr.prod)) {
      if (c.compose(pr.p, h) == want_p && c.compose(pr.q, h) == want_q && x.rst(h) == want_r) {
        if (found != kNoMor) return -2;
        found = h;
      }
    }
    return found;
  };
  for (auto& [ab, pr] : s.prods) {
    if (ab.first == ab.second) {
      MorId i = c.id(ab.first);
      MorId d = pair(i, i, pr);
      if (d >= 0) s.diag[ab.first] = d;
    }
  }
  for (auto& [ab, pr] : s.prods) {
    for (auto& [ab2, pr2] : s.prods) {
      for (MorId f : c.hom(ab.first, ab2.first))
        for (MorId g : c.hom(ab.second, ab2.second)) {
          MorId h = pair(c.compose(f, pr.p), c.compose(g, pr.q), pr2);
          if (h >= 0) s.tensor[{f, g}] = h;
        }
    }
  }
  if (terminal) {
    for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) {
      // the total map to T
      for (MorId t : c.hom(a, *terminal))
        if (x.rst(t) == c.id(a)) {
          s.to_terminal[a] = t;
          break;
        }
    }
  }
  return s;
}

FinView::FinView(const FinCategory& c, const CoproductStructure* cp, const ProductStructure* rp)
    : c_(&c), cp_(cp), rp_(rp) {
  for (ObjId a = 0; a < static_cast<ObjId>(c.num_objects()); ++a) objs_.push_back(a);
}

FinView::FinView(const FinRCat& x, const CoproductStructure* cp, const ProductStructure* rp)
    : FinView(x.base(), cp, rp) {
  rst_ = &x.restriction_table();
}

std::optional<ObjId> FinView::sum(ObjId a, ObjId b) const {
  if (!cp_) return std::nullopt;
  auto* s = cp_->find(a, b);
  return s ? std::optional<ObjId>(s->sum) : std::nullopt;
}

const CoproductStructure::Sum& FinView::need_sum(ObjId a, ObjId b) const {
  auto* s = cp_ ? cp_->find(a, b) : nullptr;
  if (!s) throw StructureError("no chosen coproduct " + obj_name(a) + "+" + obj_name(b));
  return *s;
}

MorId FinView::inl(ObjId a, ObjId b) const { return need_sum(a, b).inl; }
MorId FinView::inr(ObjId a, ObjId b) const { return need_sum(a, b).inr; }

MorId FinView::copair(MorId f, MorId g) const {
  need_sum(dom(f), dom(g));
  MorId h = cp_->copair(*c_, f, g);
  if (h == kNoMor)
    throw StructureError("copair <" + name(f) + "|" + name(g) + "> is not unique or missing");
  return h;
}

std::optional<ObjId> FinView::initial() const {
  return cp_ ? cp_->initial() : std::nullopt;
}

MorId FinView::from_initial(ObjId a) const {
  auto z = initial();
  if (!z) throw StructureError("no chosen initial object");
  const auto& h = hom(*z, a);
  if (h.empty()) throw StructureError("no map from the initial object to " + obj_name(a));
  return h.front();
}

std::optional<ObjId> FinView::prod(ObjId a, ObjId b) const {
  if (!rp_) return std::nullopt;
  auto* p = rp_->find(a, b);
  return p ? std::optional<ObjId>(p->prod) : std::nullopt;
}

const ProductStructure::Prod& FinView::need_prod(ObjId a, ObjId b) const {
  auto* p = rp_ ? rp_->find(a, b) : nullptr;
  if (!p) throw StructureError("no chosen product " + obj_name(a) + "x" + obj_name(b));
  return *p;
}

MorId FinView::proj1(ObjId a, ObjId b) const { return need_prod(a, b).p; }
MorId FinView::proj2(ObjId a, ObjId b) const { return need_prod(a, b).q; }

MorId FinView::diag(ObjId a) const {
  need_prod(a, a);
  auto it = rp_->diag.find(a);
  if (it == rp_->diag.end()) throw StructureError("no diagonal on " + obj_name(a));
  return it->second;
}

MorId FinView::tensor(MorId f, MorId g) const {
  auto it = rp_ ? rp_->tensor.find({f, g}) : decltype(rp_->tensor.end()){};
  if (!rp_ || it == rp_->tensor.end())
    throw StructureError("no tensor " + name(f) + " x " + name(g));
  return it->second;
}

std::optional<ObjId> FinView::terminal() const {
  return rp_ ? rp_->terminal : std::nullopt;
}

MorId FinView::to_terminal(ObjId a) const {
  if (!rp_ || !rp_->terminal) throw StructureError("no chosen terminal object");
  auto it = rp_->to_terminal.find(a);
  if (it == rp_->to_terminal.end()) throw StructureError("no map to the terminal from " + obj_name(a));
  return it->second;
}

}  // namespace rcat
