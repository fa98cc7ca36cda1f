#include "oracles.hpp"

#include <algorithm>
#include <cstddef>
#include <set>

namespace dp4::testing {

Coeff oracle_dot(const DivisorClass& x, const DivisorClass& y) {
  Coeff acc = x.a * y.a;
  for (std::size_t i = 0; i < 5; ++i) acc -= x.b[i] * y.b[i];
  return acc;
}

Coeff oracle_degree(const DivisorClass& x) {
  return oracle_dot(DivisorClass{3, {1, 1, 1, 1, 1}}, x);
}

Coeff oracle_genus(const DivisorClass& x) {
  const DivisorClass k{-3, {-1, -1, -1, -1, -1}};
  return (oracle_dot(x, x) + oracle_dot(x, k)) / 2 + 1;
}

Coeff oracle_chi(const DivisorClass& x) {
  return (oracle_dot(x, x) + oracle_degree(x)) / 2 + 1;
}

std::vector<DivisorClass> lines_by_shape() {
  std::vector<DivisorClass> out;
  for (int i = 0; i < 5; ++i) {
    DivisorClass e;
    e.b[i] = -1;
    out.push_back(e);
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      DivisorClass l{1, {0, 0, 0, 0, 0}};
      l.b[i] = 1;
      l.b[j] = 1;
      out.push_back(l);
    }
  }
  out.push_back(DivisorClass{2, {1, 1, 1, 1, 1}});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> conics_by_shape() {
  std::vector<DivisorClass> out;
  for (int i = 0; i < 5; ++i) {
    DivisorClass q{1, {0, 0, 0, 0, 0}};
    q.b[i] = 1;
    out.push_back(q);
  }
  for (int skip = 0; skip < 5; ++skip) {
    DivisorClass q{2, {1, 1, 1, 1, 1}};
    q.b[skip] = 0;
    out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <typename Pred>
std::vector<DivisorClass> box_sweep(Coeff box, Pred keep) {
  std::vector<DivisorClass> out;
  DivisorClass d;
  for (d.a = -box; d.a <= box; ++d.a)
    for (d.b[0] = -box; d.b[0] <= box; ++d.b[0])
      for (d.b[1] = -box; d.b[1] <= box; ++d.b[1])
        for (d.b[2] = -box; d.b[2] <= box; ++d.b[2])
          for (d.b[3] = -box; d.b[3] <= box; ++d.b[3])
            for (d.b[4] = -box; d.b[4] <= box; ++d.b[4])
              if (keep(d)) out.push_back(d);
  return out;
}

}  // namespace

std::vector<DivisorClass> lines_box_sweep(Coeff box) {
  return box_sweep(box, [](const DivisorClass& d) {
    return oracle_dot(d, d) == -1 && oracle_degree(d) == 1;
  });
}

std::vector<DivisorClass> conics_box_sweep(Coeff box) {
  return box_sweep(box, [](const DivisorClass& d) {
    return oracle_dot(d, d) == 0 && oracle_degree(d) == 2;
  });
}

EffectivityOracle::EffectivityOracle(Coeff budget) : budget_(budget) {
  stride_ = static_cast<std::size_t>(budget + 1);
  const std::size_t cells = stride_ * stride_ * stride_ * stride_ * stride_;
  covered_.assign(static_cast<std::size_t>(budget + 1),
                  std::vector<char>(cells, 0));

  // Generators with positive a-coordinate; the e_i generators only lower a
  // b-coordinate and are absorbed by the downward closure below.
  std::vector<DivisorClass> gens;
  gens.push_back(DivisorClass{1, {0, 0, 0, 0, 0}});  // l
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      DivisorClass l{1, {0, 0, 0, 0, 0}};
      l.b[i] = 1;
      l.b[j] = 1;
      gens.push_back(l);
    }
  }
  gens.push_back(DivisorClass{2, {1, 1, 1, 1, 1}});

  // All multisets of generators with total a <= budget.
  std::set<DivisorClass> sums;
  std::vector<std::pair<std::size_t, DivisorClass>> stack;
  stack.push_back({0, DivisorClass{}});
  while (!stack.empty()) {
    auto [from, cur] = stack.back();
    stack.pop_back();
    sums.insert(cur);
    for (std::size_t i = from; i < gens.size(); ++i) {
      if (cur.a + gens[i].a <= budget_) {
        DivisorClass next = cur;
        next.a += gens[i].a;
        for (std::size_t c = 0; c < 5; ++c) next.b[c] += gens[i].b[c];
        stack.push_back({i, next});
      }
    }
  }
  for (const DivisorClass& sum : sums) {
    covered_[static_cast<std::size_t>(sum.a)][index_of(sum.b)] = 1;
  }

  // Downward closure: a cell is covered if any componentwise-larger cell is.
  for (auto& grid : covered_) {
    std::size_t step = 1;
    for (std::size_t dim = 0; dim < 5; ++dim) {
      for (std::size_t cell = grid.size(); cell-- > 0;) {
        const std::size_t coord = (cell / step) % stride_;
        if (coord + 1 < stride_ && grid[cell + step]) grid[cell] = 1;
      }
      step *= stride_;
    }
  }
}

std::size_t EffectivityOracle::index_of(const std::array<Coeff, 5>& b) const {
  std::size_t idx = 0;
  for (Coeff bi : b) {
    idx = idx * stride_ + static_cast<std::size_t>(bi);
  }
  return idx;
}

bool EffectivityOracle::effective(const DivisorClass& cls) const {
  if (cls.a < 0) return false;
  if (cls.a > budget_) {
    throw DomainError("effectivity oracle query outside its budget");
  }
  std::array<Coeff, 5> clamped{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (cls.b[i] > budget_) {
      throw DomainError("effectivity oracle query outside its budget");
    }
    clamped[i] = std::max<Coeff>(cls.b[i], 0);
  }
  return covered_[static_cast<std::size_t>(cls.a)][index_of(clamped)] != 0;
}

}  // namespace dp4::testing
