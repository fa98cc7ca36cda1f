#include "dp4/families.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dp4 {

namespace {

Coeff isqrt(Coeff n) {
  if (n < 0) throw DomainError("isqrt of negative value");
  auto r = static_cast<Coeff>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// 4(d+2g-2) <= d^2, the Hodge-index bound for curve classes.
bool hodge_bound_holds(Coeff d, Coeff g) {
  return ck_mul(4, ck_add(d, ck_sub(ck_mul(2, g), 2))) <= ck_mul(d, d);
}

}  // namespace

bool is_curve_tuple(const DivisorClass& tuple) {
  return is_standard(tuple) && tuple.b[4] >= 0 && tuple.a > tuple.b[0];
}

ClassificationLabel classify_family(const DivisorClass& tuple, Coeff d,
                                    Coeff g, Coeff k, Coeff s,
                                    const FixedPart& fixed_part_2) {
  if (!is_curve_tuple(tuple) || !is_big(tuple) || d <= 8) {
    throw PreconditionError("classify_family requires a big curve tuple with d > 8");
  }
  if (k == 0) {
    return {Classification::GenericallySmoothComponent,
            ClassificationRule::Thm_1_1_2};
  }
  const bool single_reduced_line =
      fixed_part_2.size() == 1 && fixed_part_2.front().mult == 1;
  if (k == 1 && single_reduced_line && g >= ck_sub(ck_mul(2, d), 12)) {
    return {Classification::GenericallyNonReducedComponent,
            ClassificationRule::Thm_1_2};
  }
  if (s == 0 && k > 0) {
    return {Classification::NonComponent, ClassificationRule::Thm_1_1_3};
  }
  if (tuple.b[4] == 0 && d > 10) {
    const DivisorClass adjoint = add(tuple, canonical_class());
    if (is_effective(adjoint) && is_big(adjoint)) {
      return {Classification::NonComponent, ClassificationRule::Lemma_3_9};
    }
  }
  return {Classification::Unknown, ClassificationRule::None};
}

FamilyRecord make_family_record(const DivisorClass& tuple,
                                bool allow_small_degree) {
  if (!is_curve_tuple(tuple)) {
    throw NotACurveClassError(to_string(tuple) +
                              " is not a curve tuple (standard, b5 >= 0, a > b1)");
  }
  FamilyRecord rec;
  rec.tuple = tuple;
  rec.d = degree(tuple);
  rec.g = arithmetic_genus(tuple);

  const DivisorClass twisted = add(tuple, scale(canonical_class(), 2));
  rec.fixed_part_2 =
      is_effective(twisted) ? zariski_decompose(twisted).fixed_part : FixedPart{};
  rec.k = h1_ideal(tuple, 2);
  rec.s = h1_structure(tuple, 2);

  if (rec.d <= 8) {
    if (!allow_small_degree) {
      throw DegreeTooSmallError("degree " + std::to_string(rec.d) +
                                " <= 8; the family invariants assume d > 8");
    }
    rec.lattice_only = true;
    return rec;
  }

  rec.dim_w = ck_add(ck_add(rec.d, rec.g), 25);
  rec.tangent_dim =
      ck_add(ck_sub(ck_add(rec.d, rec.g), 1),
             ck_mul(2, ck_add(ck_sub(ck_add(ck_mul(2, rec.d), 1), rec.g), rec.s)));
  rec.label = classify_family(tuple, rec.d, rec.g, rec.k, rec.s,
                              rec.fixed_part_2);
  return rec;
}

namespace {

// Fills b[slot..4] with b_slot >= ... >= b_4 >= 0 summing to rem_sum with
// squares summing to rem_sq, descending so output is b-lexicographically
// descending. prev_max already accounts for a > b1 at slot 0.
void descend(int slot, Coeff prev_max, Coeff rem_sum, Coeff rem_sq,
             DivisorClass& cur, std::vector<FamilyRecord>& out,
             bool allow_small_degree) {
  if (slot == 5) {
    if (rem_sum == 0 && rem_sq == 0) {
      out.push_back(make_family_record(cur, allow_small_degree));
    }
    return;
  }
  const Coeff slots_left = 5 - slot;
  Coeff hi = std::min(prev_max, std::min(rem_sum, isqrt(std::max<Coeff>(rem_sq, 0))));
  if (slot == 2) hi = std::min(hi, ck_sub(cur.a, ck_add(cur.b[0], cur.b[1])));
  const Coeff lo = (rem_sum + slots_left - 1) / slots_left;  // ceil
  for (Coeff v = hi; v >= lo; --v) {
    const Coeff next_sum = ck_sub(rem_sum, v);
    const Coeff next_sq = ck_sub(rem_sq, ck_mul(v, v));
    if (next_sq < 0) continue;
    if (slots_left > 1 &&
        ck_mul(next_sum, next_sum) > ck_mul(slots_left - 1, next_sq)) {
      continue;  // Cauchy-Schwarz infeasible for the remaining slots
    }
    if (slots_left == 1 && (next_sum != 0 || next_sq != 0)) continue;
    cur.b[slot] = v;
    descend(slot + 1, v, next_sum, next_sq, cur, out, allow_small_degree);
  }
}

}  // namespace

std::vector<FamilyRecord> enumerate_families(Coeff d, Coeff g,
                                             bool allow_small_degree) {
  if (d <= 8 && !allow_small_degree) {
    throw DegreeTooSmallError("degree " + std::to_string(d) +
                              " <= 8; pass the small-degree override for lattice data");
  }
  if (g < 0) {
    throw PreconditionError("genus must be nonnegative");
  }
  std::vector<FamilyRecord> out;
  if (!hodge_bound_holds(d, g)) return out;

  // Solutions satisfy sum b = 3a-d and sum b^2 = a^2+2-2g-d; Cauchy-Schwarz
  // (sum b)^2 <= 5 sum b^2 pins a between the roots of
  // 4a^2 - 6da + (d^2+5d+10g-10) = 0.
  const Coeff disc =
      ck_mul(5, ck_add(ck_sub(ck_mul(d, d), ck_mul(4, d)), ck_sub(8, ck_mul(8, g))));
  if (disc < 0) return out;
  const Coeff root = isqrt(disc);
  const Coeff a_lo = std::max<Coeff>(1, (3 * d - root + 3) / 4);
  const Coeff a_hi = (3 * d + root) / 4;

  for (Coeff a = a_lo; a <= a_hi; ++a) {
    const Coeff sum_b = ck_sub(ck_mul(3, a), d);
    const Coeff sum_sq = ck_sub(ck_add(ck_mul(a, a), 2), ck_add(ck_mul(2, g), d));
    if (sum_b < 0 || sum_sq < 0) continue;
    if (ck_mul(sum_b, sum_b) > ck_mul(5, sum_sq)) continue;
    DivisorClass cur;
    cur.a = a;
    descend(0, a - 1, sum_b, sum_sq, cur, out, allow_small_degree);
  }
  return out;
}

Coeff tangent_dimension(const DivisorClass& tuple) {
  if (!is_curve_tuple(tuple)) {
    throw PreconditionError("tangent_dimension requires a curve tuple");
  }
  const Coeff d = degree(tuple);
  const Coeff g = arithmetic_genus(tuple);
  if (d <= 8) {
    throw PreconditionError("tangent_dimension requires d > 8");
  }
  const Coeff s = h1_structure(tuple, 2);
  return ck_add(ck_sub(ck_add(d, g), 1),
                ck_mul(2, ck_add(ck_sub(ck_add(ck_mul(2, d), 1), g), s)));
}

Coeff hilb_flag_dimension(Coeff d, Coeff g, Coeff n) {
  return ck_add(ck_add(d, g), ck_add(ck_mul(n, n), 9));
}

Coeff chi_normal_bundle(Coeff d, Coeff g) {
  return ck_sub(ck_add(ck_mul(5, d), 1), g);
}

std::pair<Coeff, Coeff> hilb_dim_bounds(const FamilyRecord& rec) {
  if (rec.lattice_only) {
    throw DegreeTooSmallError("hilb_dim_bounds requires d > 8");
  }
  const Coeff upper = ck_add(rec.dim_w, ck_mul(2, rec.k));
  return {ck_sub(upper, ck_mul(2, rec.s)), upper};
}

const std::set<std::pair<Coeff, Coeff>>& exceptional_pairs() {
  static const std::set<std::pair<Coeff, Coeff>> pairs = [] {
    std::set<std::pair<Coeff, Coeff>> out;
    for (Coeff lambda = 9; lambda < 12; ++lambda) {
      for (Coeff mu = 0; mu < 12 - lambda; ++mu) {
        const DivisorClass cls{lambda, {mu, 0, 0, 0, 0}};
        out.insert({degree(cls), arithmetic_genus(cls)});
      }
    }
    return out;
  }();
  return pairs;
}

RegionLabel region_of(Coeff d, Coeff g) {
  if (d <= 8) {
    throw DegreeTooSmallError("region partition is defined for d > 8");
  }
  if (!hodge_bound_holds(d, g)) {
    return {Region::OutOfRange, "4(d+2g-2) > d^2"};
  }
  if (ck_mul(10, g) > ck_add(ck_sub(ck_mul(d, d), ck_mul(3, d)), 6)) {
    return {Region::I, "10g > d^2-3d+6"};
  }
  if (g < ck_add(d, 1)) {
    return {Region::IV, "g < d+1"};
  }
  if (ck_mul(2, g) < ck_sub(ck_mul(5, d), 70) &&
      !exceptional_pairs().contains({d, g})) {
    return {Region::IV, "2g < 5d-70 and (d,g) not in P"};
  }
  if (g >= ck_sub(ck_mul(2, d), 12)) {
    return {Region::II, "g >= 2d-12"};
  }
  return {Region::III, "d+1 <= g < 2d-12 outside [I] and [IV]"};
}

Coeff max_genus(Coeff d) {
  const Coeff num = ck_add(ck_sub(ck_mul(d, d), ck_mul(4, d)), 8);
  return num >= 0 ? num / 8 : -((-num + 7) / 8);
}

std::vector<FamilyRecord> table1_records() {
  std::vector<FamilyRecord> out;
  for (Coeff d = 14; d <= 18; ++d) {
    for (Coeff g = 0; g <= max_genus(d); ++g) {
      if (region_of(d, g).region != Region::II) continue;
      std::vector<FamilyRecord> rows = enumerate_families(d, g);
      out.insert(out.end(), rows.begin(), rows.end());
    }
  }
  return out;
}

std::string to_string(Classification label) {
  switch (label) {
    case Classification::GenericallySmoothComponent:
      return "GenericallySmoothComponent";
    case Classification::GenericallyNonReducedComponent:
      return "GenericallyNonReducedComponent";
    case Classification::NonComponent:
      return "NonComponent";
    case Classification::Unknown:
      return "Unknown";
  }
  throw InternalError("unreachable classification");
}

std::string to_string(ClassificationRule rule) {
  switch (rule) {
    case ClassificationRule::Thm_1_1_2:
      return "Thm1.1(2)";
    case ClassificationRule::Thm_1_2:
      return "Thm1.2";
    case ClassificationRule::Thm_1_1_3:
      return "Thm1.1(3)";
    case ClassificationRule::Lemma_3_9:
      return "Lemma3.9/Thm4.6(3)";
    case ClassificationRule::None:
      return "none";
  }
  throw InternalError("unreachable classification rule");
}

std::string to_string(Region region) {
  switch (region) {
    case Region::I:
      return "I";
    case Region::II:
      return "II";
    case Region::III:
      return "III";
    case Region::IV:
      return "IV";
    case Region::OutOfRange:
      return "OutOfRange";
  }
  throw InternalError("unreachable region");
}

std::string table_label(Classification label) {
  switch (label) {
    case Classification::GenericallySmoothComponent:
      return "gen. smooth component";
    case Classification::GenericallyNonReducedComponent:
      return "gen. non-reduced component";
    case Classification::NonComponent:
      return "non-component";
    case Classification::Unknown:
      return "unknown";
  }
  throw InternalError("unreachable classification");
}

}  // namespace dp4
