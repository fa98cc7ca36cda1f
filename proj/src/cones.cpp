#include "dp4/cones.hpp"

#include <string>

namespace dp4 {

LineClass::LineClass(const DivisorClass& c) : cls(c) {
  if (self_intersection(c) != -1 || degree(c) != 1) {
    throw DomainError("not a line class: " + to_string(c));
  }
}

ConicClass::ConicClass(const DivisorClass& c) : cls(c) {
  if (self_intersection(c) != 0 || degree(c) != 2) {
    throw DomainError("not a conic class: " + to_string(c));
  }
}

const std::vector<LineClass>& all_lines() {
  // Any line class has a <= 2 (Cauchy-Schwarz on sum b = 3a-1 and
  // sum b^2 = a^2+1) and |b_i| <= 2, so the box below is exhaustive.
  static const std::vector<LineClass> lines = [] {
    std::vector<LineClass> out;
    DivisorClass d;
    for (d.a = -3; d.a <= 3; ++d.a)
      for (d.b[0] = -3; d.b[0] <= 3; ++d.b[0])
        for (d.b[1] = -3; d.b[1] <= 3; ++d.b[1])
          for (d.b[2] = -3; d.b[2] <= 3; ++d.b[2])
            for (d.b[3] = -3; d.b[3] <= 3; ++d.b[3])
              for (d.b[4] = -3; d.b[4] <= 3; ++d.b[4])
                if (self_intersection(d) == -1 && degree(d) == 1)
                  out.emplace_back(d);
    return out;
  }();
  return lines;
}

const std::vector<ConicClass>& all_conics() {
  static const std::vector<ConicClass> conics = [] {
    std::vector<ConicClass> out;
    DivisorClass d;
    for (d.a = -3; d.a <= 3; ++d.a)
      for (d.b[0] = -3; d.b[0] <= 3; ++d.b[0])
        for (d.b[1] = -3; d.b[1] <= 3; ++d.b[1])
          for (d.b[2] = -3; d.b[2] <= 3; ++d.b[2])
            for (d.b[3] = -3; d.b[3] <= 3; ++d.b[3])
              for (d.b[4] = -3; d.b[4] <= 3; ++d.b[4])
                if (self_intersection(d) == 0 && degree(d) == 2 &&
                    is_effective(d))
                  out.emplace_back(d);
    return out;
  }();
  return conics;
}

bool is_nef(const DivisorClass& x) {
  for (const LineClass& line : all_lines()) {
    if (intersect(x, line.cls) < 0) return false;
  }
  return true;
}

bool is_big(const DivisorClass& x) { return self_intersection(x) > 0; }

bool is_effective(const DivisorClass& x) {
  DivisorClass cur = x;
  for (;;) {
    if (cur == zero_class()) return true;
    if (degree(cur) < 0) return false;
    const LineClass* negative = nullptr;
    for (const LineClass& line : all_lines()) {
      if (intersect(cur, line.cls) < 0) {
        negative = &line;
        break;
      }
    }
    if (negative == nullptr) return true;  // nef
    cur = subtract(cur, negative->cls);
  }
}

ZariskiDecomposition zariski_decompose(const DivisorClass& x) {
  if (!is_effective(x)) {
    throw NotEffectiveError("class is not effective: " + to_string(x));
  }
  ZariskiDecomposition z;
  DivisorClass fixed_total = zero_class();
  for (const LineClass& line : all_lines()) {
    const Coeff n = intersect(x, line.cls);
    if (n < 0) {
      z.fixed_part.push_back({line, -n});
      fixed_total = add(fixed_total, scale(line.cls, -n));
    }
  }
  z.nef_part = subtract(x, fixed_total);

  if (!is_nef(z.nef_part)) {
    throw InconsistentDecompositionError("nef part fails the nef check for " +
                                         to_string(x));
  }
  for (const FixedPartEntry& entry : z.fixed_part) {
    if (intersect(z.nef_part, entry.line.cls) != 0) {
      throw InconsistentDecompositionError(
          "nef part meets a fixed line of " + to_string(x));
    }
  }
  for (std::size_t i = 0; i < z.fixed_part.size(); ++i) {
    for (std::size_t j = i + 1; j < z.fixed_part.size(); ++j) {
      if (intersect(z.fixed_part[i].line.cls, z.fixed_part[j].line.cls) != 0) {
        throw InconsistentDecompositionError(
            "fixed lines are not disjoint for " + to_string(x));
      }
    }
  }
  if (add(z.nef_part, fixed_total) != x) {
    throw InconsistentDecompositionError("reassembly failed for " +
                                         to_string(x));
  }
  return z;
}

std::optional<std::pair<Coeff, ConicClass>> conic_multiple(
    const DivisorClass& x) {
  for (const ConicClass& q : all_conics()) {
    if (x.a % q.cls.a != 0) continue;  // conic classes have a in {1,2}
    const Coeff m = x.a / q.cls.a;
    if (m >= 1 && scale(q.cls, m) == x) return std::pair{m, q};
  }
  return std::nullopt;
}

Coeff h0_fixed_part(const FixedPart& fixed) {
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (fixed[i].mult < 1) {
      throw DomainError("fixed-part multiplicity must be positive");
    }
    for (std::size_t j = i + 1; j < fixed.size(); ++j) {
      if (intersect(fixed[i].line.cls, fixed[j].line.cls) != 0) {
        throw LinesNotDisjointError("fixed-part lines are not disjoint");
      }
    }
  }
  Coeff total = 0;
  for (const FixedPartEntry& entry : fixed) {
    total = ck_add(total, ck_mul(entry.mult, ck_add(entry.mult, 1)) / 2);
  }
  return total;
}

}  // namespace dp4
