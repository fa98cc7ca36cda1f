#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "dp4/errors.hpp"

namespace dp4 {

using Coeff = std::int64_t;

// Checked 64-bit arithmetic. Wrapping would silently corrupt enumeration
// results, so overflow raises OverflowError instead.
Coeff ck_add(Coeff x, Coeff y);
Coeff ck_sub(Coeff x, Coeff y);
Coeff ck_mul(Coeff x, Coeff y);

// A divisor class a*l - sum_i b[i]*e_i in Pic S = Z^6 of the quartic
// del Pezzo surface, written "(a;b1,b2,b3,b4,b5)". Any integer vector is a
// valid class; equality is componentwise and ordering is lexicographic on
// (a, b1, ..., b5).
struct DivisorClass {
  Coeff a = 0;
  std::array<Coeff, 5> b{0, 0, 0, 0, 0};

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

// The canonical class K = (-3;-1,-1,-1,-1,-1), with K.K = 4.
DivisorClass canonical_class();
// -K = (3;1,1,1,1,1), the hyperplane class of the embedding in P^4.
DivisorClass anticanonical_class();
DivisorClass zero_class();

DivisorClass add(const DivisorClass& x, const DivisorClass& y);
DivisorClass subtract(const DivisorClass& x, const DivisorClass& y);
DivisorClass scale(const DivisorClass& x, Coeff n);
DivisorClass negate(const DivisorClass& x);

// Intersection pairing: l^2 = 1, e_i^2 = -1, mixed products 0, so
// D.D' = a a' - sum_i b_i b'_i. Symmetric and bilinear.
Coeff intersect(const DivisorClass& x, const DivisorClass& y);
Coeff self_intersection(const DivisorClass& x);

// degree = 3a - sum b_i = (-K).D
Coeff degree(const DivisorClass& x);

// arithmetic genus = (a-1)(a-2)/2 - sum b_i(b_i-1)/2 = (D^2 + D.K)/2 + 1
Coeff arithmetic_genus(const DivisorClass& x);

// Riemann-Roch Euler characteristic chi(D) = D.(D-K)/2 + 1.
Coeff euler_char(const DivisorClass& x);

// Parses "(a;b1,b2,b3,b4,b5)". Spaces are tolerated anywhere between
// tokens; the canonical printed form has none.
DivisorClass parse_class(std::string_view text);
std::string to_string(const DivisorClass& x);

}  // namespace dp4
