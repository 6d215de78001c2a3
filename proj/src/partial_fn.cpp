#include "rcat/partial_fn.hpp"

#include <sstream>

namespace rcat {

PartialFn::PartialFn(int s, int g, std::vector<int> table) : src(s), tgt(g), t(std::move(table)) {
  if (s < 0 || g < 0) throw ShapeMismatch("negative set size");
  if (static_cast<int>(t.size()) != s)
    throw ShapeMismatch("table length " + std::to_string(t.size()) + " != source size " +
                        std::to_string(s));
  for (int x : t)
    if (x != kUndef && (x < 0 || x >= g))
      throw ShapeMismatch("value " + std::to_string(x) + " outside target of size " +
                          std::to_string(g));
}

PartialFn PartialFn::identity(int n) {
  std::vector<int> t(n);
  for (int i = 0; i < n; ++i) t[i] = i;
  return {n, n, std::move(t)};
}

PartialFn PartialFn::nowhere(int s, int g) { return {s, g, std::vector<int>(s, kUndef)}; }

PartialFn PartialFn::constant(int s, int g, int value) {
  return {s, g, std::vector<int>(s, value)};
}

bool PartialFn::total() const {
  for (int x : t)
    if (x == kUndef) return false;
  return true;
}

std::string PartialFn::text() const {
  std::string s = std::to_string(src) + " " + std::to_string(tgt);
  for (int x : t) s += x == kUndef ? " -" : " " + std::to_string(x);
  return s;
}

PartialFn PartialFn::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<std::string> toks;
  while (in >> tok) toks.push_back(tok);
  auto num = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      int v = std::stoi(toks[i], &used);
      if (used != toks[i].size() || v < 0) throw std::invalid_argument("");
      return v;
    } catch (const std::logic_error&) {
      throw MalformedTable("partial function token " + std::to_string(i + 1) + ": bad value '" +
                           toks[i] + "'");
    }
  };
  if (toks.size() < 2) throw MalformedTable("partial function: expected 'src tgt t0 ...'");
  int s = num(0), g = num(1);
  if (toks.size() != static_cast<std::size_t>(s) + 2)
    throw MalformedTable("partial function: expected " + std::to_string(s) +
                         " table entries, got " + std::to_string(toks.size() - 2));
  std::vector<int> t;
  for (std::size_t i = 2; i < toks.size(); ++i) {
    int v = toks[i] == "-" ? kUndef : num(i);
    if (v >= g)
      throw MalformedTable("partial function token " + std::to_string(i + 1) + ": value " +
                           toks[i] + " outside target");
    t.push_back(v);
  }
  return {s, g, std::move(t)};
}

std::string PartialFn::name() const {
  std::string s = std::to_string(src) + ">" + std::to_string(tgt) + ":";
  for (int i = 0; i < src; ++i) {
    if (i) s += ",";
    s += t[i] == kUndef ? "-" : std::to_string(t[i]);
  }
  return s;
}

std::uint64_t PartialFn::rank() const {
  std::uint64_t r = 0;
  for (int x : t) r = r * static_cast<std::uint64_t>(tgt + 1) + static_cast<std::uint64_t>(x + 1);
  return r;
}

PartialFn PartialFn::unrank(int s, int g, std::uint64_t r) {
  std::vector<int> t(s);
  for (int i = s - 1; i >= 0; --i) {
    t[i] = static_cast<int>(r % static_cast<std::uint64_t>(g + 1)) - 1;
    r /= static_cast<std::uint64_t>(g + 1);
  }
  return {s, g, std::move(t)};
}

std::uint64_t hom_size(int s, int g) {
  std::uint64_t n = 1;
  for (int i = 0; i < s; ++i) n *= static_cast<std::uint64_t>(g + 1);
  return n;
}

std::vector<PartialFn> all_partial_fns(int s, int g) {
  std::vector<PartialFn> out;
  std::uint64_t n = hom_size(s, g);
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(PartialFn::unrank(s, g, r));
  return out;
}

PartialFn par_compose(const PartialFn& g, const PartialFn& f) {
  if (f.tgt != g.src)
    throw ShapeMismatch("par_compose: target " + std::to_string(f.tgt) + " != source " +
                        std::to_string(g.src));
  PartialFn h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.t.resize(f.src);
  for (int x = 0; x < f.src; ++x) h.t[x] = f.t[x] == PartialFn::kUndef ? f.t[x] : g.t[f.t[x]];
  return h;
}

PartialFn par_restriction(const PartialFn& f) {
  PartialFn r;
  r.src = r.tgt = f.src;
  r.t.resize(f.src);
  for (int x = 0; x < f.src; ++x) r.t[x] = f.t[x] == PartialFn::kUndef ? f.t[x] : x;
  return r;
}

PartialFn par_inl(int a, int b) {
  std::vector<int> t(a);
  for (int i = 0; i < a; ++i) t[i] = i;
  return {a, a + b, std::move(t)};
}

PartialFn par_inr(int a, int b) {
  std::vector<int> t(b);
  for (int i = 0; i < b; ++i) t[i] = a + i;
  return {b, a + b, std::move(t)};
}

PartialFn par_copair(const PartialFn& f, const PartialFn& g) {
  if (f.tgt != g.tgt) throw ShapeMismatch("par_copair: different targets");
  std::vector<int> t = f.t;
  t.insert(t.end(), g.t.begin(), g.t.end());
  return {f.src + g.src, f.tgt, std::move(t)};
}

PartialFn par_plus(const PartialFn& f, const PartialFn& g) {
  return par_copair(par_compose(par_inl(f.tgt, g.tgt), f), par_compose(par_inr(f.tgt, g.tgt), g));
}

PartialFn par_proj1(int a, int b) {
  std::vector<int> t(static_cast<std::size_t>(a) * b);
  for (int i = 0; i < a * b; ++i) t[i] = i / b;
  return {a * b, a, std::move(t)};
}

PartialFn par_proj2(int a, int b) {
  std::vector<int> t(static_cast<std::size_t>(a) * b);
  for (int i = 0; i < a * b; ++i) t[i] = i % b;
  return {a * b, b, std::move(t)};
}

PartialFn par_diag(int a) {
  std::vector<int> t(a);
  for (int i = 0; i < a; ++i) t[i] = i * a + i;
  return {a, a * a, std::move(t)};
}

PartialFn par_tensor(const PartialFn& f, const PartialFn& g) {
  std::vector<int> t(static_cast<std::size_t>(f.src) * g.src);
  for (int x = 0; x < f.src; ++x)
    for (int y = 0; y < g.src; ++y)
      t[x * g.src + y] = f.defined(x) && g.defined(y) ? f(x) * g.tgt + g(y) : PartialFn::kUndef;
  return {f.src * g.src, f.tgt * g.tgt, std::move(t)};
}

PartialFn par_ord_proj1(int a, int b) {
  int n = a + a * b + b;
  std::vector<int> t(n, PartialFn::kUndef);
  for (int i = 0; i < a; ++i) t[i] = i;
  for (int i = 0; i < a * b; ++i) t[a + i] = i / b;
  return {n, a, std::move(t)};
}

PartialFn par_ord_proj2(int a, int b) {
  int n = a + a * b + b;
  std::vector<int> t(n, PartialFn::kUndef);
  for (int i = 0; i < a * b; ++i) t[a + i] = i % b;
  for (int i = 0; i < b; ++i) t[a + a * b + i] = i;
  return {n, b, std::move(t)};
}

PartialFn par_ord_pair(const PartialFn& f, const PartialFn& g) {
  if (f.src != g.src) throw ShapeMismatch("par_ord_pair: different sources");
  int a = f.tgt, b = g.tgt;
  std::vector<int> t(f.src, PartialFn::kUndef);
  for (int x = 0; x < f.src; ++x) {
    if (f.defined(x) && g.defined(x))
      t[x] = a + f(x) * b + g(x);
    else if (f.defined(x))
      t[x] = f(x);
    else if (g.defined(x))
      t[x] = a + a * b + g(x);
  }
  return {f.src, a + a * b + b, std::move(t)};
}

}  // namespace rcat
