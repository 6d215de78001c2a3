#pragma once

// Hand-rolled generators and independent oracles shared by the test binaries.

#include <optional>
#include <random>
#include <vector>

#include "rcat/partial_fn.hpp"

namespace rcat::testing {

using Table = std::vector<std::optional<int>>;

inline Table table_of(const PartialFn& f) {
  Table t;
  for (int x : f.t) t.push_back(x < 0 ? std::nullopt : std::optional<int>(x));
  return t;
}

// pointwise composite, written without the library
inline Table oracle_compose(const Table& g, const Table& f) {
  Table out;
  for (auto& v : f) out.push_back(v ? g[*v] : std::nullopt);
  return out;
}

inline Table oracle_domain(const Table& f) {
  Table out;
  for (std::size_t x = 0; x < f.size(); ++x)
    out.push_back(f[x] ? std::optional<int>(static_cast<int>(x)) : std::nullopt);
  return out;
}

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed = 7) : rng(seed) {}

  int below(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
  int size(int max) { return below(max + 1); }

  PartialFn partial(int s, int t, int undef_weight = 1) {
    std::vector<int> v(s);
    for (int x = 0; x < s; ++x) {
      int k = below(t + undef_weight);
      v[x] = k < t ? k : PartialFn::kUndef;
    }
    return {s, t, v};
  }
  PartialFn total(int s, int t) { return partial(s, t, 0); }
};

}  // namespace rcat::testing
