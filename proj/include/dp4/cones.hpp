#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dp4/divisor.hpp"

namespace dp4 {

// Class of a line, i.e. a (-1)-curve: self-intersection -1 and degree 1.
struct LineClass {
  DivisorClass cls;

  explicit LineClass(const DivisorClass& c);

  friend bool operator==(const LineClass&, const LineClass&) = default;
  friend auto operator<=>(const LineClass&, const LineClass&) = default;
};

// Class of a conic: self-intersection 0 and degree 2; moves in a pencil.
struct ConicClass {
  DivisorClass cls;

  explicit ConicClass(const DivisorClass& c);

  friend bool operator==(const ConicClass&, const ConicClass&) = default;
  friend auto operator<=>(const ConicClass&, const ConicClass&) = default;
};

// The 16 line classes: e_i (5), l-e_i-e_j (10), 2l-e_1-...-e_5 (1).
// Enumerated once by bounded brute force, lexicographic on (a,b1..b5).
const std::vector<LineClass>& all_lines();

// The 10 effective conic classes: l-e_i (5) and 2l minus four e's (5).
const std::vector<ConicClass>& all_conics();

// D is nef iff D.l >= 0 for all 16 lines.
bool is_nef(const DivisorClass& x);

// D is big iff D^2 > 0.
bool is_big(const DivisorClass& x);

// Decision procedure: 0 is effective; negative degree is not; nef classes
// are effective; otherwise subtract the lexicographically least line met
// negatively and recurse. Degree strictly decreases, so this terminates.
bool is_effective(const DivisorClass& x);

struct FixedPartEntry {
  LineClass line;
  Coeff mult;  // > 0

  friend bool operator==(const FixedPartEntry&, const FixedPartEntry&) = default;
};

// Multiset of pairwise disjoint lines with multiplicities, ordered as in
// all_lines().
using FixedPart = std::vector<FixedPartEntry>;

struct ZariskiDecomposition {
  DivisorClass nef_part;
  FixedPart fixed_part;
};

// For effective D, the fixed part is F = -sum_{D.l<0} (D.l) l over lines and
// the nef part is D - F. The nef part meets every fixed line in 0 and the
// fixed lines are pairwise disjoint; both facts are re-verified and a
// violation raises InconsistentDecompositionError.
ZariskiDecomposition zariski_decompose(const DivisorClass& x);

// If D = m*q for a conic class q and an integer m >= 1, returns (m, q).
std::optional<std::pair<Coeff, ConicClass>> conic_multiple(const DivisorClass& x);

// h^0 of the structure sheaf of F = sum m_i l_i for pairwise disjoint lines:
// sum_i m_i(m_i+1)/2.
Coeff h0_fixed_part(const FixedPart& fixed);

}  // namespace dp4
