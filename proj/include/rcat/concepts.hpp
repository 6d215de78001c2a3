#pragma once

// Generic interface shared by materialized tables (FinView) and by categories
// computed on the fly (Par, K_r, Total, Kleisli ...).  objects() is the finite
// scope that quantified laws range over; composites may leave it.

#include <concepts>
#include <optional>
#include <ranges>
#include <string>
#include <vector>

namespace rcat {

template <class C>
concept Category = requires(const C& c, const typename C::Obj& a, const typename C::Mor& f) {
  typename C::Obj;
  typename C::Mor;
  { c.objects() } -> std::ranges::range;
  { c.hom(a, a) } -> std::ranges::range;
  { c.dom(f) } -> std::convertible_to<typename C::Obj>;
  { c.cod(f) } -> std::convertible_to<typename C::Obj>;
  { c.id(a) } -> std::convertible_to<typename C::Mor>;
  { c.compose(f, f) } -> std::convertible_to<typename C::Mor>;
  { c.name(f) } -> std::convertible_to<std::string>;
  { c.obj_name(a) } -> std::convertible_to<std::string>;
  { f == f } -> std::convertible_to<bool>;
  { a == a } -> std::convertible_to<bool>;
};

template <class C>
concept RestrictionCategory = Category<C> && requires(const C& c, const typename C::Mor& f) {
  { c.rst(f) } -> std::convertible_to<typename C::Mor>;
};

// chosen binary coproducts (possibly only for some pairs) and an initial object
template <class C>
concept HasCoproducts =
    Category<C> && requires(const C& c, const typename C::Obj& a, const typename C::Mor& f) {
      { c.sum(a, a) } -> std::same_as<std::optional<typename C::Obj>>;
      { c.inl(a, a) } -> std::convertible_to<typename C::Mor>;
      { c.inr(a, a) } -> std::convertible_to<typename C::Mor>;
      { c.copair(f, f) } -> std::convertible_to<typename C::Mor>;
      { c.initial() } -> std::same_as<std::optional<typename C::Obj>>;
      { c.from_initial(a) } -> std::convertible_to<typename C::Mor>;
    };

// restriction products (×, Δ, p, q) and restriction terminal T with t_A
template <class C>
concept HasRestrictionProducts =
    Category<C> && requires(const C& c, const typename C::Obj& a, const typename C::Mor& f) {
      { c.prod(a, a) } -> std::same_as<std::optional<typename C::Obj>>;
      { c.proj1(a, a) } -> std::convertible_to<typename C::Mor>;
      { c.proj2(a, a) } -> std::convertible_to<typename C::Mor>;
      { c.diag(a) } -> std::convertible_to<typename C::Mor>;
      { c.tensor(f, f) } -> std::convertible_to<typename C::Mor>;
      { c.terminal() } -> std::same_as<std::optional<typename C::Obj>>;
      { c.to_terminal(a) } -> std::convertible_to<typename C::Mor>;
    };

// products in the ordinary (non-restriction) sense, e.g. A + A×B + B in Par
template <class C>
concept HasOrdinaryProducts =
    Category<C> && requires(const C& c, const typename C::Obj& a, const typename C::Mor& f) {
      { c.ord_prod(a, a) } -> std::same_as<std::optional<typename C::Obj>>;
      { c.ord_pair(f, f) } -> std::convertible_to<typename C::Mor>;
      { c.ord_terminal() } -> std::same_as<std::optional<typename C::Obj>>;
      { c.ord_bang(a) } -> std::convertible_to<typename C::Mor>;
    };

// categories that know how to split a restriction idempotent directly
template <class C>
concept HasSplitting = Category<C> && requires(const C& c, const typename C::Mor& e) {
  { c.split(e) };  // -> std::optional<Splitting<C>>
};

template <Category C>
using ObjOf = typename C::Obj;
template <Category C>
using MorOf = typename C::Mor;

// e = incl · retr with retr · incl = 1
template <class Obj, class Mor>
struct Splitting {
  Obj obj;
  Mor incl;  // obj -> A
  Mor retr;  // A -> obj
};

template <Category C>
std::vector<ObjOf<C>> objects_of(const C& c) {
  std::vector<ObjOf<C>> out;
  for (auto&& a : c.objects()) out.push_back(a);
  return out;
}

template <Category C>
std::vector<MorOf<C>> hom_of(const C& c, const ObjOf<C>& a, const ObjOf<C>& b) {
  std::vector<MorOf<C>> out;
  for (auto&& f : c.hom(a, b)) out.push_back(f);
  return out;
}

// all morphisms out of a into objects of the scope
template <Category C>
std::vector<MorOf<C>> out_of(const C& c, const ObjOf<C>& a) {
  std::vector<MorOf<C>> out;
  for (auto&& b : c.objects())
    for (auto&& f : c.hom(a, b)) out.push_back(f);
  return out;
}

template <Category C>
std::vector<MorOf<C>> all_morphisms(const C& c) {
  std::vector<MorOf<C>> out;
  for (auto&& a : c.objects())
    for (auto&& b : c.objects())
      for (auto&& f : c.hom(a, b)) out.push_back(f);
  return out;
}

template <Category C>
std::size_t count_morphisms(const C& c) {
  std::size_t n = 0;
  for (auto&& a : c.objects())
    for (auto&& b : c.objects()) n += std::ranges::distance(c.hom(a, b));
  return n;
}

template <Category C>
bool in_scope(const C& c, const ObjOf<C>& a) {
  for (auto&& b : c.objects())
    if (b == a) return true;
  return false;
}

}  // namespace rcat
