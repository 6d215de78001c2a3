#pragma once

// Small named instances used by tests, the acceptance suite and the CLI.

#include "rcat/fin_view.hpp"
#include "rcat/partial_fn.hpp"

namespace rcat {

// a finite restriction category together with chosen structure
struct Instance {
  FinRCat x;
  CoproductStructure cp;
  ProductStructure rp;
  bool has_coproducts = false, has_products = false;

  FinView view() const {
    return FinView(x, has_coproducts ? &cp : nullptr, has_products ? &rp : nullptr);
  }
};

// one object, one morphism; 0 = A = A+A = A×A = 1
Instance trivial_instance();

// FinSet on sizes 0..n with total functions, trivial restriction, and the
// coproducts a+b and cartesian products a×b whose size stays within n
Instance finset_fragment(int n);

// Partial maps on labelled sets 0,1,2,C,CC,4 (sizes 0,1,2,3,6,4, with
// 2 = 1+1, CC = C+C, 4 = 2+2), closed under composition, restriction and
// copairing, generated by the structure maps and f = C>2:0,0,1.  It has
// restriction coproducts and a restriction zero, but f has no decision: the
// map C -> C+C that would decide it was never generated.
struct Counterexample {
  Instance inst;
  MorId f;
};
Counterexample truncated_counterexample();

// F2-vector spaces of dimension 0..2 with all linear maps, trivial
// restriction, and biproducts serving as both products and coproducts.  The
// canonical A×B + A×C -> A×(B+C) is not invertible (at 1,0,0), so it is a
// copy category with restriction coproducts that is not distributive.  Its
// zero object is not a restriction zero.
Instance f2vect_fragment();

}  // namespace rcat
