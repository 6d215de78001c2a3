#include "rcat/par.hpp"

namespace rcat {

std::vector<int> ParCat::objects() const {
  std::vector<int> v(max_ + 1);
  for (int i = 0; i <= max_; ++i) v[i] = i;
  return v;
}

std::optional<Splitting<int, PartialFn>> ParCat::split(const PartialFn& e) const {
  if (e.src != e.tgt || par_restriction(e) != e) return std::nullopt;
  std::vector<int> incl, retr(e.src, PartialFn::kUndef);
  for (int x = 0; x < e.src; ++x)
    if (e.defined(x)) {
      retr[x] = static_cast<int>(incl.size());
      incl.push_back(x);
    }
  int k = static_cast<int>(incl.size());
  return Splitting<int, PartialFn>{k, PartialFn(k, e.src, incl), PartialFn(e.src, k, retr)};
}

ParIndex::ParIndex(int n) : n_(n), offset_(static_cast<std::size_t>(n + 1) * (n + 1)) {
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      offset_[a * (n + 1) + b] = total_;
      total_ += hom_size(a, b);
    }
}

MorId ParIndex::id_of(const PartialFn& f) const {
  if (f.src > n_ || f.tgt > n_) throw UnknownMorphism("partial function outside Par<=" + std::to_string(n_));
  return static_cast<MorId>(offset(f.src, f.tgt) + f.rank());
}

PartialFn ParIndex::fn(MorId id) const {
  for (int a = 0; a <= n_; ++a)
    for (int b = 0; b <= n_; ++b) {
      std::size_t lo = offset(a, b), hi = lo + hom_size(a, b);
      if (static_cast<std::size_t>(id) >= lo && static_cast<std::size_t>(id) < hi)
        return PartialFn::unrank(a, b, id - lo);
    }
  throw UnknownMorphism("id " + std::to_string(id) + " outside Par<=" + std::to_string(n_));
}

FinRCat par_to_rcat(int max_size, std::size_t cap) {
  if (max_size < 0) throw ShapeMismatch("max_size must be nonnegative");
  ParIndex ix(max_size);
  if (ix.size() > cap)
    throw CapExceeded("Par<=" + std::to_string(max_size) + " has " + std::to_string(ix.size()) +
                      " morphisms, cap " + std::to_string(cap));
  CategoryData d;
  std::vector<PartialFn> fns;
  fns.reserve(ix.size());
  for (int a = 0; a <= max_size; ++a) d.objects.push_back(std::to_string(a));
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b)
      for (auto& f : all_partial_fns(a, b)) {
        d.morphisms.push_back({f.name(), a, b});
        fns.push_back(std::move(f));
      }
  for (int a = 0; a <= max_size; ++a) d.identity.push_back(ix.id_of(PartialFn::identity(a)));
  FinCategory c(std::move(d),
                [&](MorId g, MorId f) { return ix.id_of(par_compose(fns[g], fns[f])); });
  std::vector<MorId> r(fns.size());
  for (std::size_t f = 0; f < fns.size(); ++f) r[f] = ix.id_of(par_restriction(fns[f]));
  return FinRCat(std::move(c), std::move(r));
}

CoproductStructure par_coproducts(const FinRCat& par, int max_size) {
  ParIndex ix(max_size);
  std::map<std::pair<ObjId, ObjId>, CoproductStructure::Sum> sums;
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; a + b <= max_size; ++b)
      sums[{a, b}] = {a + b, ix.id_of(par_inl(a, b)), ix.id_of(par_inr(a, b))};
  return CoproductStructure(par.base(), std::move(sums), 0);
}

ProductStructure par_products(const FinRCat& par, int max_size) {
  (void)par;
  ParIndex ix(max_size);
  ProductStructure s;
  for (int a = 0; a <= max_size; ++a)
    for (int b = 0; b <= max_size; ++b)
      if (a * b <= max_size)
        s.prods[{a, b}] = {a * b, ix.id_of(par_proj1(a, b)), ix.id_of(par_proj2(a, b))};
  for (int a = 0; a <= max_size; ++a)
    if (a * a <= max_size) s.diag[a] = ix.id_of(par_diag(a));
  for (auto& [ab, pr] : s.prods)
    for (auto& [ab2, pr2] : s.prods)
      for (auto& f : all_partial_fns(ab.first, ab2.first))
        for (auto& g : all_partial_fns(ab.second, ab2.second))
          s.tensor[{ix.id_of(f), ix.id_of(g)}] = ix.id_of(par_tensor(f, g));
  if (max_size >= 1) {
    s.terminal = 1;
    for (int a = 0; a <= max_size; ++a) s.to_terminal[a] = ix.id_of(PartialFn::constant(a, 1, 0));
  }
  return s;
}

namespace {

// FinSet(A, B+1) <-> Par(A, B): the last point of B+1 means undefined
PartialFn to_par(const PartialFn& k) {
  std::vector<int> t(k.src);
  for (int x = 0; x < k.src; ++x) t[x] = k(x) == k.tgt - 1 ? PartialFn::kUndef : k(x);
  return {k.src, k.tgt - 1, std::move(t)};
}

PartialFn to_kleisli(const PartialFn& f) {
  std::vector<int> t(f.src);
  for (int x = 0; x < f.src; ++x) t[x] = f.defined(x) ? f(x) : f.tgt;
  return {f.src, f.tgt + 1, std::move(t)};
}

// total functions A -> B+1
std::vector<PartialFn> kleisli_hom(int a, int b) {
  std::vector<PartialFn> out;
  for (auto& f : all_partial_fns(a, b + 1))
    if (f.total()) out.push_back(std::move(f));
  return out;
}

// μ ∘ (g+1) ∘ f
PartialFn kleisli_compose(const PartialFn& g, const PartialFn& f) {
  int b = f.tgt - 1, c = g.tgt - 1;
  PartialFn g1 = par_plus(g, PartialFn::identity(1));                  // B+1 -> (C+1)+1
  PartialFn mu = par_copair(PartialFn::identity(c + 1), par_inr(c, 1));  // (C+1)+1 -> C+1
  (void)b;
  return par_compose(mu, par_compose(g1, f));
}

}  // namespace

PartialFn kleisli_restriction_formula(const PartialFn& f) {
  const int a = f.src, b1 = f.tgt, b = b1 - 1;
  // <1,f> : A -> A×(B+1)
  std::vector<int> pair(a);
  for (int x = 0; x < a; ++x) pair[x] = x * b1 + f(x);
  // δ⁻¹ : A×(B+1) -> A×B + A
  std::vector<int> dinv(a * b1);
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b1; ++y) dinv[x * b1 + y] = y < b ? x * b + y : a * b + x;
  // π₁ + ! : A×B + A -> A + 1
  std::vector<int> pr(a * b + a);
  for (int i = 0; i < a * b + a; ++i) pr[i] = i < a * b ? i / b : a;
  PartialFn p1(a, a * b1, pair), p2(a * b1, a * b + a, dinv), p3(a * b + a, a + 1, pr);
  return par_compose(p3, par_compose(p2, p1));
}

LawReport kleisli_plus_one_check(int max_size, std::size_t cap) {
  ParIndex ix(max_size);
  if (ix.size() > cap)
    throw CapExceeded("Par<=" + std::to_string(max_size) + " exceeds cap " + std::to_string(cap));
  CheckOptions o;
  LawReport rep;
  for (int a = 0; a <= max_size; ++a) {
    for (int b = 0; b <= max_size; ++b) {
      auto ks = kleisli_hom(a, b);
      ++rep.checked;
      if (ks.size() != hom_size(a, b) &&
          rep.fail(o, "hom-count", {std::to_string(a), std::to_string(b)}))
        return rep;
      for (auto& k : ks) {
        PartialFn f = to_par(k);
        if (to_kleisli(f) != k && rep.fail(o, "bijection", {k.name()})) return rep;
        if (to_par(kleisli_restriction_formula(k)) != par_restriction(f) &&
            rep.fail(o, "restriction", {k.name()}))
          return rep;
        for (int c = 0; c <= max_size; ++c)
          for (auto& g : kleisli_hom(b, c)) {
            ++rep.checked;
            if (to_par(kleisli_compose(g, k)) != par_compose(to_par(g), f) &&
                rep.fail(o, "composition", {g.name(), k.name()}))
              return rep;
          }
      }
    }
    PartialFn eta = par_inl(a, 1);
    if (to_par(eta) != PartialFn::identity(a) && rep.fail(o, "identity", {eta.name()})) return rep;
  }
  return rep;
}

}  // namespace rcat
