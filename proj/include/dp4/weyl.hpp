#pragma once

#include <vector>

#include "dp4/divisor.hpp"

namespace dp4 {

// One generator of the Weyl group action on Pic S: either a permutation of
// the five exceptional coordinates or the Cremona transformation based at
// the first three.
struct WeylGenerator {
  enum class Kind { Permutation, Cremona };

  Kind kind = Kind::Cremona;
  // Output slot i takes input coordinate perm[i] (0-based). Only meaningful
  // for Kind::Permutation.
  std::array<int, 5> perm{0, 1, 2, 3, 4};

  friend bool operator==(const WeylGenerator&, const WeylGenerator&) = default;
};

// Replaying the word on the class it was recorded for reproduces the
// normalized output.
using WeylWord = std::vector<WeylGenerator>;

struct NormalizeResult {
  DivisorClass standard;
  WeylWord word;
};

// (a;b1..b5) -> (2a-b1-b2-b3; a-b2-b3, a-b1-b3, a-b1-b2, b4, b5).
// An involution; preserves the intersection pairing and fixes K.
DivisorClass apply_cremona(const DivisorClass& x);

DivisorClass apply_generator(const DivisorClass& x, const WeylGenerator& g);
DivisorClass apply_word(const DivisorClass& x, const WeylWord& word);

// Standard coordinates: b1 >= b2 >= ... >= b5 and a >= b1 + b2 + b3.
bool is_standard(const DivisorClass& x);

// Repeats { stable-sort b descending; stop if a >= b1+b2+b3; else Cremona }.
// Each Cremona step strictly decreases a and a is bounded below on the
// orbit, so the loop terminates; NonTerminatingError after 10000 iterations
// would signal a bug.
NormalizeResult normalize(const DivisorClass& x);

std::string to_string(const WeylGenerator& g);
std::string to_string(const WeylWord& word);

}  // namespace dp4
