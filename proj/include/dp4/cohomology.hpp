#pragma once

#include "dp4/cones.hpp"

namespace dp4 {

// Exact cohomology dimensions of a line-bundle class. Satisfies
// h0 - h1 + h2 == chi of the class; construction checks this.
struct CohomologyTriple {
  Coeff h0 = 0;
  Coeff h1 = 0;
  Coeff h2 = 0;

  static CohomologyTriple make(Coeff h0, Coeff h1, Coeff h2, Coeff chi);

  friend bool operator==(const CohomologyTriple&, const CohomologyTriple&) = default;
};

// h^0 of a class: 0 unless effective, else chi of the nef Zariski part
// (nef classes have no higher cohomology and the fixed part does not move).
Coeff h0(const DivisorClass& x);

// Cohomology of -D: h0 = h0(-D), h2 = h0(D+K) by Serre duality, and
// h1 = h0 + h2 - chi(-D).
CohomologyTriple cohomology_of_minus(const DivisorClass& x);

// h^1 of the twisted ideal sheaf of the curve C in P^4: h^1(S, -(C+mK)).
Coeff h1_ideal(const DivisorClass& curve, Coeff m);

// h^1 of O_C(m) for m >= 0: h^0(S, C+(m+1)K). Negative m raises
// NegativeTwistError.
Coeff h1_structure(const DivisorClass& curve, Coeff m);

}  // namespace dp4
