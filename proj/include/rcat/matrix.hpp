#pragma once

#include "rcat/decisions.hpp"

namespace rcat {

// A map Σ_Λ A_λ -> Σ_K B_κ as its grid of components f_λκ = i*_κ·f·i_λ, with
// per row the restriction inverse h_λ of <r̄f_λκ>_κ : Σ_K A_λ -> A_λ
template <Category C>
struct PartialMatrix {
  std::vector<ObjOf<C>> rows, cols;
  std::vector<std::vector<MorOf<C>>> entries;  // [λ][κ]
  std::vector<MorOf<C>> witness;               // h_λ

  bool operator==(const PartialMatrix&) const = default;
};

namespace detail {

// <r̄f_λκ>_κ for one row
template <class C>
MorOf<C> row_domains(const C& c, const ObjOf<C>& a, const std::vector<MorOf<C>>& row) {
  auto sa = need_nsum(c, copies<C>(a, row.size()));
  std::vector<MorOf<C>> doms;
  for (auto& e : row) doms.push_back(c.rst(e));
  return ncopair(c, sa, doms, a);
}

// first h with h restriction inverse to <r̄e_κ>_κ and r̄h = ∨ r̄e_κ
template <class C>
std::optional<MorOf<C>> row_witness(const C& c, const ObjOf<C>& a,
                                    const std::vector<MorOf<C>>& row) {
  auto g = row_domains(c, a, row);
  for (auto&& h : c.hom(a, c.dom(g)))
    if (are_restriction_inverse(c, g, h)) return h;
  return std::nullopt;
}

template <class C>
void check_shape(const C& c, const PartialMatrix<C>& m) {
  if (m.entries.size() != m.rows.size() || m.witness.size() != m.rows.size())
    throw ShapeMismatch("matrix: row count mismatch");
  for (std::size_t l = 0; l < m.rows.size(); ++l) {
    if (m.entries[l].size() != m.cols.size()) throw ShapeMismatch("matrix: column count mismatch");
    for (std::size_t k = 0; k < m.cols.size(); ++k) {
      const auto& e = m.entries[l][k];
      if (!(c.dom(e) == m.rows[l]) || !(c.cod(e) == m.cols[k]))
        throw ShapeMismatch("matrix: entry (" + std::to_string(l) + "," + std::to_string(k) +
                            ") " + c.name(e) + " has the wrong type");
    }
  }
}

}  // namespace detail

template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
PartialMatrix<C> matrix_decompose(const C& c, const MorOf<C>& f, const std::vector<ObjOf<C>>& rows,
                                  const std::vector<ObjOf<C>>& cols) {
  auto zw = need_zero(c);
  auto sa = need_nsum(c, rows), sb = need_nsum(c, cols);
  if (!(c.dom(f) == sa.total) || !(c.cod(f) == sb.total))
    throw ShapeMismatch("matrix_decompose: " + c.name(f) + " is not a map between the given sums");
  PartialMatrix<C> m{rows, cols, {}, {}};
  std::vector<MorOf<C>> rets;
  for (std::size_t k = 0; k < cols.size(); ++k) rets.push_back(retraction(c, zw, sb, k));
  for (std::size_t l = 0; l < rows.size(); ++l) {
    auto fl = c.compose(f, sa.inj[l]);
    std::vector<MorOf<C>> row;
    for (auto& r : rets) row.push_back(c.compose(r, fl));
    auto h = detail::row_witness(c, rows[l], row);
    if (!h || !(c.rst(*h) == c.rst(fl))) throw NoDecision("no decision for row " + std::to_string(l));
    m.entries.push_back(std::move(row));
    m.witness.push_back(*h);
  }
  return m;
}

// Row λ is (Σ_κ f_λκ)·h_λ : A_λ -> Σ_K B_κ; the map is the copair of the rows,
// which is ∇·(Σf_λκ)·(Σh_λ) without forming Σ_λκ A_λ
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
MorOf<C> matrix_recompose(const C& c, const PartialMatrix<C>& m) {
  detail::check_shape(c, m);
  auto sa = need_nsum(c, m.rows), sb = need_nsum(c, m.cols);
  std::vector<MorOf<C>> rows;
  for (std::size_t l = 0; l < m.rows.size(); ++l) {
    auto g = detail::row_domains(c, m.rows[l], m.entries[l]);
    if (!are_restriction_inverse(c, g, m.witness[l]))
      throw InvalidWitness("row " + std::to_string(l) + ": " + c.name(m.witness[l]) +
                           " is not restriction inverse to " + c.name(g));
    auto sl = need_nsum(c, copies<C>(m.rows[l], m.cols.size()));
    rows.push_back(c.compose(nplus(c, sl, sb, m.entries[l]), m.witness[l]));
  }
  return ncopair(c, sa, rows, sb.total);
}

// entry (λ,μ) = <g_κμ·f_λκ>_κ · h_λ
template <class C>
  requires RestrictionCategory<C> && HasCoproducts<C>
PartialMatrix<C> matrix_multiply(const C& c, const PartialMatrix<C>& g, const PartialMatrix<C>& f) {
  detail::check_shape(c, g);
  detail::check_shape(c, f);
  if (f.cols.size() != g.rows.size())
    throw ShapeMismatch("matrix_multiply: inner dimensions differ");
  for (std::size_t k = 0; k < f.cols.size(); ++k)
    if (!(f.cols[k] == g.rows[k]))
      throw ShapeMismatch("matrix_multiply: column " + std::to_string(k) + " of F is " +
                          c.obj_name(f.cols[k]) + " but row " + std::to_string(k) + " of G is " +
                          c.obj_name(g.rows[k]));
  PartialMatrix<C> out{f.rows, g.cols, {}, {}};
  for (std::size_t l = 0; l < f.rows.size(); ++l) {
    auto sl = need_nsum(c, copies<C>(f.rows[l], f.cols.size()));
    std::vector<MorOf<C>> row;
    for (std::size_t mu = 0; mu < g.cols.size(); ++mu) {
      std::vector<MorOf<C>> legs;
      for (std::size_t k = 0; k < f.cols.size(); ++k)
        legs.push_back(c.compose(g.entries[k][mu], f.entries[l][k]));
      row.push_back(c.compose(ncopair(c, sl, legs, g.cols[mu]), f.witness[l]));
    }
    auto h = detail::row_witness(c, f.rows[l], row);
    if (!h) throw NoDecision("no witness for product row " + std::to_string(l));
    out.entries.push_back(std::move(row));
    out.witness.push_back(*h);
  }
  return out;
}

}  // namespace rcat
