#pragma once

// File formats.  Loaders throw MalformedTable with the position of the bad
// field ("morphisms[3].dom", "compose[17]", or "line:column" for JSON syntax).
//
// Category file: {objects, morphisms [{name, dom, cod}], identity {obj: mor},
// compose [[g, f, gf], ...], restriction {mor: mor}} plus optional
// coproducts [{left, right, sum, inl, inr}], initial, products
// [{left, right, product, p, q}], terminal.  A missing restriction means the
// trivial one.  A distributive file adds dist_inv [{a, b, c, map}].

#include <string>
#include <vector>

#include "rcat/distributive.hpp"
#include "rcat/instances.hpp"
#include "rcat/limits.hpp"
#include "rcat/matrix.hpp"

namespace rcat::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

Instance parse_category(const std::string& text);
// one array element per line; byte-stable for a given table
std::string format_category(const FinRCat& x, const CoproductStructure* cp = nullptr,
                            const ProductStructure* rp = nullptr);
inline std::string format_category(const Instance& i) {
  return format_category(i.x, i.has_coproducts ? &i.cp : nullptr,
                         i.has_products ? &i.rp : nullptr);
}

// validated with DistTable::validate; InvalidDistributiveData when δ⁻¹ is wrong
DistTable parse_distributive(const std::string& text);
std::string format_distributive(const DistTable& d);

// "A+B+C" -> object ids; '+' separates names
std::vector<ObjId> parse_object_sum(const FinCategory& c, const std::string& text,
                                    const std::string& where);

// header "rows=A+B cols=C+D", then one entry name per cell in row-major
// order, then optionally "witness h_0 ... h_n".  Missing witnesses are
// searched for; rows without one throw InvalidWitness.
PartialMatrix<FinView> parse_matrix(const FinView& v, const std::string& text);
std::string format_matrix(const FinView& v, const PartialMatrix<FinView>& m);

// {nodes [label], arrows [{name, from, to}], assignment {label: name}}
struct DiagramFile {
  Diagram<FinView> diagram;
  std::vector<std::string> node_labels, arrow_labels;
};
DiagramFile parse_diagram(const FinView& v, const std::string& text);

}  // namespace rcat::io
