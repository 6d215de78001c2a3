#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rcat/errors.hpp"

namespace rcat {

// Partial function between {0..src-1} and {0..tgt-1}; -1 marks undefined.
// Conventions: A+B lists A's indices first, A×B pairs (a,b) as a·|B|+b, and the
// extra point of B+1 is its last index.
struct PartialFn {
  int src = 0;
  int tgt = 0;
  std::vector<int> t;

  static constexpr int kUndef = -1;

  PartialFn() = default;
  PartialFn(int s, int g, std::vector<int> table);

  static PartialFn identity(int n);
  static PartialFn nowhere(int s, int g);
  static PartialFn constant(int s, int g, int value);

  bool defined(int x) const { return t[x] != kUndef; }
  int operator()(int x) const { return t[x]; }
  bool total() const;

  // text form "src tgt t0 t1 ..." with '-' for undefined
  std::string text() const;
  static PartialFn parse(const std::string& text);
  // compact name used for materialized categories, e.g. "2>3:0,-"
  std::string name() const;

  // lexicographic rank inside hom(src, tgt): undefined counts as digit 0
  std::uint64_t rank() const;
  static PartialFn unrank(int s, int g, std::uint64_t r);

  friend auto operator<=>(const PartialFn&, const PartialFn&) = default;
  friend bool operator==(const PartialFn&, const PartialFn&) = default;
};

std::uint64_t hom_size(int s, int g);
std::vector<PartialFn> all_partial_fns(int s, int g);

PartialFn par_compose(const PartialFn& g, const PartialFn& f);
PartialFn par_restriction(const PartialFn& f);

// coproducts
PartialFn par_inl(int a, int b);
PartialFn par_inr(int a, int b);
PartialFn par_copair(const PartialFn& f, const PartialFn& g);
PartialFn par_plus(const PartialFn& f, const PartialFn& g);

// cartesian (restriction) products
PartialFn par_proj1(int a, int b);
PartialFn par_proj2(int a, int b);
PartialFn par_diag(int a);
PartialFn par_tensor(const PartialFn& f, const PartialFn& g);

// ordinary products A + A×B + B
PartialFn par_ord_proj1(int a, int b);
PartialFn par_ord_proj2(int a, int b);
PartialFn par_ord_pair(const PartialFn& f, const PartialFn& g);

}  // namespace rcat
