#pragma once

#include <set>
#include <utility>
#include <vector>

#include "dp4/cohomology.hpp"
#include "dp4/weyl.hpp"

namespace dp4 {

enum class Classification {
  GenericallySmoothComponent,
  GenericallyNonReducedComponent,
  NonComponent,
  Unknown,
};

// Which classification rule fired.
enum class ClassificationRule {
  Thm_1_1_2,   // k == 0: generically smooth component
  Thm_1_2,     // k == 1, single reduced fixed line, g >= 2d-12: non-reduced
  Thm_1_1_3,   // s == 0, k > 0: positive-codimension subset, not a component
  Lemma_3_9,   // b5 == 0, d > 10, C+K effective and big: not a component
  None,
};

struct ClassificationLabel {
  Classification label = Classification::Unknown;
  ClassificationRule rule = ClassificationRule::None;

  friend bool operator==(const ClassificationLabel&, const ClassificationLabel&) = default;
};

// One maximal family of smooth curves of degree d and genus g in P^4 lying
// on a quartic del Pezzo surface, keyed by its standard tuple.
struct FamilyRecord {
  DivisorClass tuple;  // standard, b5 >= 0, a > b1
  Coeff d = 0;
  Coeff g = 0;
  Coeff dim_w = 0;        // d + g + 25
  Coeff k = 0;            // h1 of the twisted ideal sheaf at m = 2
  Coeff s = 0;            // h1 of O_C(2)
  Coeff tangent_dim = 0;  // h0 of the normal bundle in P^4
  FixedPart fixed_part_2; // fixed part of |C + 2K|
  ClassificationLabel label;
  // Set by the d <= 8 override: only tuple/d/g/k/s/fixed_part_2 apply;
  // dim_w, tangent_dim and label are not meaningful.
  bool lattice_only = false;

  friend bool operator==(const FamilyRecord&, const FamilyRecord&) = default;
};

// Whether a class indexes a curve family: standard, b5 >= 0 (nef) and
// a > b1 (together with nef: big for any d > 8 solution).
bool is_curve_tuple(const DivisorClass& tuple);

// Builds the full record for a curve tuple. Raises NotACurveClassError if
// the tuple fails the conditions above and DegreeTooSmallError if d <= 8,
// unless allow_small_degree is set, in which case a lattice-only record is
// returned.
FamilyRecord make_family_record(const DivisorClass& tuple,
                                bool allow_small_degree = false);

// All curve tuples of the given degree and genus, sorted by ascending a and
// descending (b1..b5) within equal a. Empty when the Hodge-index bound
// 4(d+2g-2) <= d^2 fails.
std::vector<FamilyRecord> enumerate_families(Coeff d, Coeff g,
                                             bool allow_small_degree = false);

// Decision ladder, first match wins:
//   (1) k == 0                                    -> smooth component
//   (2) k == 1, single reduced fixed line,
//       g >= 2d-12                                -> non-reduced component
//   (3) s == 0 and k > 0                          -> non-component
//   (4) b5 == 0, d > 10, C+K effective and big    -> non-component
//   (5) otherwise                                 -> unknown
ClassificationLabel classify_family(const DivisorClass& tuple, Coeff d, Coeff g,
                                    Coeff k, Coeff s,
                                    const FixedPart& fixed_part_2);

// h^0(N_{C/P^4}) = (d+g-1) + 2*((2d+1-g) + s) for a curve tuple with d > 8.
Coeff tangent_dimension(const DivisorClass& tuple);

// Dimension of the flag scheme of pairs (curve, surface) in P^n: d+g+n^2+9.
Coeff hilb_flag_dimension(Coeff d, Coeff g, Coeff n = 4);

// chi of the normal bundle in P^4: 5d+1-g.
Coeff chi_normal_bundle(Coeff d, Coeff g);

// Bounds (dim_w + 2k - 2s, dim_w + 2k) on the local dimension of the
// Hilbert scheme at the family.
std::pair<Coeff, Coeff> hilb_dim_bounds(const FamilyRecord& rec);

// The pairs (d,g) of the six exceptional classes (lambda;mu,0,0,0,0) with
// 9 <= lambda < 12 and 0 <= mu < 12-lambda, computed from the degree and
// genus formulas.
const std::set<std::pair<Coeff, Coeff>>& exceptional_pairs();

enum class Region { I, II, III, IV, OutOfRange };

struct RegionLabel {
  Region region = Region::OutOfRange;
  std::string inequality;  // the defining inequality that fired
};

// Partition of the (d,g)-plane for d > 8:
//   OutOfRange if 4(d+2g-2) > d^2, else I if 10g > d^2-3d+6, else IV if
//   g < d+1 or (2g < 5d-70 and (d,g) not exceptional), else II if
//   g >= 2d-12, else III.
RegionLabel region_of(Coeff d, Coeff g);

// Largest genus allowed by the Hodge-index bound at degree d.
Coeff max_genus(Coeff d);

// The 29 family records over the eleven region-II pairs with 14 <= d <= 18,
// in (d,g)-ascending then enumeration order.
std::vector<FamilyRecord> table1_records();

std::string to_string(Classification label);
std::string to_string(ClassificationRule rule);
std::string to_string(Region region);
// Human-readable table phrasing: "gen. smooth component" etc.
std::string table_label(Classification label);

}  // namespace dp4
