#include "dp4/cohomology.hpp"

#include <string>

namespace dp4 {

CohomologyTriple CohomologyTriple::make(Coeff h0, Coeff h1, Coeff h2,
                                        Coeff chi) {
  if (h0 < 0 || h1 < 0 || h2 < 0 || h0 - h1 + h2 != chi) {
    throw InternalInconsistencyError(
        "cohomology triple violates h0 - h1 + h2 == chi");
  }
  return {h0, h1, h2};
}

Coeff h0(const DivisorClass& x) {
  if (!is_effective(x)) return 0;
  return euler_char(zariski_decompose(x).nef_part);
}

CohomologyTriple cohomology_of_minus(const DivisorClass& x) {
  const Coeff h0_minus = h0(negate(x));
  const Coeff h2_minus = h0(add(x, canonical_class()));  // Serre duality
  const Coeff chi_minus = euler_char(negate(x));
  const Coeff h1_minus = ck_sub(ck_add(h0_minus, h2_minus), chi_minus);
  if (h1_minus < 0) {
    throw InternalInconsistencyError("negative h1 computed for -" +
                                     to_string(x));
  }
  return CohomologyTriple::make(h0_minus, h1_minus, h2_minus, chi_minus);
}

Coeff h1_ideal(const DivisorClass& curve, Coeff m) {
  return cohomology_of_minus(add(curve, scale(canonical_class(), m))).h1;
}

Coeff h1_structure(const DivisorClass& curve, Coeff m) {
  if (m < 0) {
    throw NegativeTwistError("h1_structure requires m >= 0, got " +
                             std::to_string(m));
  }
  return h0(add(curve, scale(canonical_class(), ck_add(m, 1))));
}

}  // namespace dp4
