#include "rcat/instances.hpp"

#include <map>
#include <set>
#include <tuple>

namespace rcat {

Instance trivial_instance() {
  CategoryData d{{"*"}, {{"1", 0, 0}}, {0}};
  Instance in;
  in.x = FinRCat(FinCategory(std::move(d), [](MorId, MorId) { return MorId{0}; }), {0});
  in.cp = CoproductStructure(in.x.base(), {{{0, 0}, {0, 0, 0}}}, 0);
  in.rp = ProductStructure::from_projections(in.x, {{{0, 0}, {0, 0, 0}}}, 0);
  in.has_coproducts = in.has_products = true;
  return in;
}

Instance finset_fragment(int n) {
  CategoryData d;
  std::vector<PartialFn> fns;
  std::map<PartialFn, MorId> ids;
  for (int a = 0; a <= n; ++a) d.objects.push_back(std::to_string(a));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (auto& f : all_partial_fns(a, b))
        if (f.total()) {
          ids[f] = static_cast<MorId>(fns.size());
          d.morphisms.push_back({f.name(), a, b});
          fns.push_back(f);
        }
  for (int a = 0; a <= n; ++a) d.identity.push_back(ids.at(PartialFn::identity(a)));
  Instance in;
  in.x = FinRCat::trivial(FinCategory(std::move(d), [&](MorId g, MorId f) {
    return ids.at(par_compose(fns[g], fns[f]));
  }));
  std::map<std::pair<ObjId, ObjId>, CoproductStructure::Sum> sums;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      sums[{a, b}] = {a + b, ids.at(par_inl(a, b)), ids.at(par_inr(a, b))};
  in.cp = CoproductStructure(in.x.base(), std::move(sums), 0);
  in.has_coproducts = true;
  if (n >= 1) {
    std::map<std::pair<ObjId, ObjId>, ProductStructure::Prod> prods;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a * b <= n && b <= n; ++b)
        prods[{a, b}] = {a * b, ids.at(par_proj1(a, b)), ids.at(par_proj2(a, b))};
    in.rp = ProductStructure::from_projections(in.x, std::move(prods), 1);
    in.has_products = true;
  }
  return in;
}

namespace {

struct LMap {
  int src, tgt;
  std::vector<int> t;
  auto operator<=>(const LMap&) const = default;
};

}  // namespace

Counterexample truncated_counterexample() {
  const std::vector<std::string> label{"0", "1", "2", "C", "CC", "4"};
  const std::vector<int> size{0, 1, 2, 3, 6, 4};
  const int n = static_cast<int>(label.size());
  std::map<std::pair<int, int>, int> sums{{{1, 1}, 2}, {{3, 3}, 4}, {{2, 2}, 5}};
  for (int a = 0; a < n; ++a) {
    sums[{a, 0}] = a;
    sums[{0, a}] = a;
  }
  auto ident = [&](int a) {
    LMap m{a, a, std::vector<int>(size[a])};
    for (int i = 0; i < size[a]; ++i) m.t[i] = i;
    return m;
  };
  auto inl = [&](int a, int b) {
    LMap m{a, sums.at({a, b}), std::vector<int>(size[a])};
    for (int i = 0; i < size[a]; ++i) m.t[i] = i;
    return m;
  };
  auto inr = [&](int a, int b) {
    LMap m{b, sums.at({a, b}), std::vector<int>(size[b])};
    for (int i = 0; i < size[b]; ++i) m.t[i] = size[a] + i;
    return m;
  };
  auto comp = [](const LMap& g, const LMap& f) {
    LMap h{f.src, g.tgt, f.t};
    for (auto& x : h.t)
      if (x >= 0) x = g.t[x];
    return h;
  };
  auto rst = [](const LMap& f) {
    LMap r{f.src, f.src, f.t};
    for (int i = 0; i < static_cast<int>(r.t.size()); ++i)
      if (r.t[i] >= 0) r.t[i] = i;
    return r;
  };
  std::set<LMap> ms;
  for (int a = 0; a < n; ++a) {
    ms.insert(ident(a));
    for (int b = 0; b < n; ++b) ms.insert(LMap{a, b, std::vector<int>(size[a], -1)});
  }
  for (auto& [ab, s] : sums) {
    ms.insert(inl(ab.first, ab.second));
    ms.insert(inr(ab.first, ab.second));
  }
  const LMap f0{3, 2, {0, 0, 1}};
  ms.insert(f0);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<LMap> cur(ms.begin(), ms.end());
    std::set<LMap> add;
    for (auto& f : cur) {
      add.insert(rst(f));
      for (auto& g : cur) {
        if (f.tgt == g.src) add.insert(comp(g, f));
        auto s = sums.find({f.src, g.src});
        if (f.tgt == g.tgt && s != sums.end()) {
          LMap h{s->second, f.tgt, f.t};
          h.t.insert(h.t.end(), g.t.begin(), g.t.end());
          add.insert(h);
        }
      }
    }
    for (auto& m : add) grew |= ms.insert(m).second;
  }
  // dense ids ordered by (src, tgt, table)
  std::vector<LMap> mors(ms.begin(), ms.end());
  std::map<LMap, MorId> ids;
  CategoryData d;
  d.objects = label;
  for (auto& m : mors) {
    ids[m] = static_cast<MorId>(d.morphisms.size());
    std::string name = label[m.src] + ">" + label[m.tgt] + ":";
    for (std::size_t i = 0; i < m.t.size(); ++i)
      name += (i ? "," : "") + (m.t[i] < 0 ? std::string("-") : std::to_string(m.t[i]));
    d.morphisms.push_back({name, m.src, m.tgt});
  }
  for (int a = 0; a < n; ++a) d.identity.push_back(ids.at(ident(a)));
  FinCategory base(std::move(d), [&](MorId g, MorId f) { return ids.at(comp(mors[g], mors[f])); });
  std::vector<MorId> r;
  for (auto& m : mors) r.push_back(ids.at(rst(m)));
  Counterexample out;
  out.inst.x = FinRCat(std::move(base), std::move(r));
  std::map<std::pair<ObjId, ObjId>, CoproductStructure::Sum> cs;
  for (auto& [ab, s] : sums)
    cs[{ab.first, ab.second}] = {s, ids.at(inl(ab.first, ab.second)),
                                 ids.at(inr(ab.first, ab.second))};
  out.inst.cp = CoproductStructure(out.inst.x.base(), std::move(cs), 0);
  out.inst.has_coproducts = true;
  out.f = ids.at(f0);
  return out;
}

namespace {

// a linear map F2^src -> F2^tgt as tgt row masks
struct F2Map {
  int src, tgt;
  std::vector<unsigned> rows;
  auto operator<=>(const F2Map&) const = default;
};

F2Map f2_compose(const F2Map& g, const F2Map& f) {
  F2Map h{f.src, g.tgt, std::vector<unsigned>(g.tgt, 0)};
  for (int k = 0; k < g.tgt; ++k)
    for (int j = 0; j < g.src; ++j)
      if (g.rows[k] >> j & 1u) h.rows[k] ^= f.rows[j];
  return h;
}

// rows of the block placing F2^a at offset `at` inside F2^n, or reading it back
F2Map f2_embed(int a, int n, int at) {
  F2Map m{a, n, std::vector<unsigned>(n, 0)};
  for (int i = 0; i < a; ++i) m.rows[at + i] = 1u << i;
  return m;
}
F2Map f2_project(int n, int a, int at) {
  F2Map m{n, a, std::vector<unsigned>(a, 0)};
  for (int i = 0; i < a; ++i) m.rows[i] = 1u << (at + i);
  return m;
}

std::string f2_name(const F2Map& m) {
  std::string s = "[";
  for (int k = 0; k < m.tgt; ++k) {
    if (k) s += ",";
    for (int j = 0; j < m.src; ++j) s += (m.rows[k] >> j & 1u) ? '1' : '0';
  }
  return s + "]:" + std::to_string(m.src) + "->" + std::to_string(m.tgt);
}

}  // namespace

Instance f2vect_fragment() {
  const int n = 2;
  CategoryData d;
  std::vector<F2Map> maps;
  std::map<F2Map, MorId> ids;
  for (int a = 0; a <= n; ++a) d.objects.push_back("F2^" + std::to_string(a));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (unsigned code = 0; code < (1u << (a * b)); ++code) {
        F2Map m{a, b, std::vector<unsigned>(b, 0)};
        for (int k = 0; k < b; ++k) m.rows[k] = (code >> (k * a)) & ((1u << a) - 1);
        ids[m] = static_cast<MorId>(maps.size());
        d.morphisms.push_back({f2_name(m), a, b});
        maps.push_back(m);
      }
  for (int a = 0; a <= n; ++a) d.identity.push_back(ids.at(f2_embed(a, a, 0)));
  Instance in;
  in.x = FinRCat::trivial(FinCategory(std::move(d), [&](MorId g, MorId f) {
    return ids.at(f2_compose(maps[g], maps[f]));
  }));
  std::map<std::pair<ObjId, ObjId>, CoproductStructure::Sum> sums;
  std::map<std::pair<ObjId, ObjId>, ProductStructure::Prod> prods;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      sums[{a, b}] = {a + b, ids.at(f2_embed(a, a + b, 0)), ids.at(f2_embed(b, a + b, a))};
      prods[{a, b}] = {a + b, ids.at(f2_project(a + b, a, 0)), ids.at(f2_project(a + b, b, a))};
    }
  in.cp = CoproductStructure(in.x.base(), std::move(sums), 0);
  in.rp = ProductStructure::from_projections(in.x, std::move(prods), 0);
  in.has_coproducts = in.has_products = true;
  return in;
}

}  // namespace rcat
