#include "dp4/weyl.hpp"

#include <algorithm>
#include <numeric>

namespace dp4 {

DivisorClass apply_cremona(const DivisorClass& x) {
  const Coeff s = ck_add(ck_add(x.b[0], x.b[1]), x.b[2]);
  DivisorClass r;
  r.a = ck_sub(ck_mul(2, x.a), s);
  r.b[0] = ck_sub(x.a, ck_add(x.b[1], x.b[2]));
  r.b[1] = ck_sub(x.a, ck_add(x.b[0], x.b[2]));
  r.b[2] = ck_sub(x.a, ck_add(x.b[0], x.b[1]));
  r.b[3] = x.b[3];
  r.b[4] = x.b[4];
  return r;
}

DivisorClass apply_generator(const DivisorClass& x, const WeylGenerator& g) {
  if (g.kind == WeylGenerator::Kind::Cremona) return apply_cremona(x);
  DivisorClass r = x;
  for (int i = 0; i < 5; ++i) r.b[i] = x.b[g.perm[i]];
  return r;
}

DivisorClass apply_word(const DivisorClass& x, const WeylWord& word) {
  DivisorClass cur = x;
  for (const WeylGenerator& g : word) cur = apply_generator(cur, g);
  return cur;
}

bool is_standard(const DivisorClass& x) {
  for (int i = 0; i + 1 < 5; ++i) {
    if (x.b[i] < x.b[i + 1]) return false;
  }
  return x.a >= ck_add(ck_add(x.b[0], x.b[1]), x.b[2]);
}

namespace {

constexpr std::array<int, 5> kIdentityPerm{0, 1, 2, 3, 4};

// Stable descending sort of the b coordinates; ties keep input order so the
// recorded permutation is deterministic.
WeylGenerator sort_generator(const DivisorClass& x) {
  WeylGenerator g;
  g.kind = WeylGenerator::Kind::Permutation;
  std::array<int, 5> idx = kIdentityPerm;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return x.b[i] > x.b[j]; });
  g.perm = idx;
  return g;
}

}  // namespace

NormalizeResult normalize(const DivisorClass& x) {
  constexpr int kMaxSteps = 10'000;
  DivisorClass cur = x;
  WeylWord word;
  for (int step = 0; step < kMaxSteps; ++step) {
    WeylGenerator sort = sort_generator(cur);
    if (sort.perm != kIdentityPerm) {
      cur = apply_generator(cur, sort);
      word.push_back(sort);
    }
    if (cur.a >= ck_add(ck_add(cur.b[0], cur.b[1]), cur.b[2])) {
      return {cur, std::move(word)};
    }
    cur = apply_cremona(cur);
    word.push_back(WeylGenerator{WeylGenerator::Kind::Cremona, kIdentityPerm});
  }
  throw NonTerminatingError("normalize exceeded 10000 iterations");
}

std::string to_string(const WeylGenerator& g) {
  if (g.kind == WeylGenerator::Kind::Cremona) return "cr";
  std::string out = "perm(";
  for (int i = 0; i < 5; ++i) {
    if (i > 0) out += " ";
    out += std::to_string(g.perm[i] + 1);
  }
  out += ")";
  return out;
}

std::string to_string(const WeylWord& word) {
  if (word.empty()) return "(empty)";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += " ";
    out += to_string(word[i]);
  }
  return out;
}

}  // namespace dp4
