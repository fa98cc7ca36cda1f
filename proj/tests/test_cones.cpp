#include <doctest.h>

#include <algorithm>
#include <random>

#include "dp4/cones.hpp"
#include "dp4/weyl.hpp"
#include "oracles.hpp"

using namespace dp4;

namespace {

DivisorClass random_class(std::mt19937_64& rng, Coeff bound) {
  std::uniform_int_distribution<Coeff> dist(-bound, bound);
  DivisorClass d;
  d.a = dist(rng);
  for (Coeff& bi : d.b) bi = dist(rng);
  return d;
}

std::vector<DivisorClass> line_classes() {
  std::vector<DivisorClass> out;
  for (const LineClass& l : all_lines()) out.push_back(l.cls);
  return out;
}

}  // namespace

TEST_CASE("the 16 lines") {
  const auto lines = line_classes();
  CHECK(lines.size() == 16);
  CHECK(std::is_sorted(lines.begin(), lines.end()));
  for (const DivisorClass& l : lines) {
    CHECK(self_intersection(l) == -1);
    CHECK(degree(l) == 1);
  }
  CHECK(lines == testing::lines_by_shape());
  // a wider sweep finds nothing else, and every solution has 0 <= a <= 2
  const auto swept = testing::lines_box_sweep(5);
  CHECK(swept == lines);
  for (const DivisorClass& l : swept) {
    CHECK(l.a >= 0);
    CHECK(l.a <= 2);
  }
  CHECK(std::count(lines.begin(), lines.end(),
                   DivisorClass{0, {0, 0, 0, 0, -1}}) == 1);
  CHECK(std::count(lines.begin(), lines.end(),
                   DivisorClass{2, {1, 1, 1, 1, 1}}) == 1);
}

TEST_CASE("the 10 conics") {
  std::vector<DivisorClass> conics;
  for (const ConicClass& q : all_conics()) conics.push_back(q.cls);
  CHECK(conics.size() == 10);
  CHECK(std::is_sorted(conics.begin(), conics.end()));
  CHECK(conics == testing::conics_by_shape());
  CHECK(testing::conics_box_sweep(5) == conics);
  CHECK(std::count(conics.begin(), conics.end(),
                   DivisorClass{1, {1, 0, 0, 0, 0}}) == 1);
  CHECK(std::count(conics.begin(), conics.end(),
                   DivisorClass{2, {1, 1, 1, 1, 0}}) == 1);
}

TEST_CASE("line and conic constructors validate") {
  CHECK_THROWS_AS(LineClass(DivisorClass{1, {0, 0, 0, 0, 0}}), DomainError);
  CHECK_THROWS_AS(ConicClass(DivisorClass{0, {0, 0, 0, 0, -1}}), DomainError);
}

TEST_CASE("is_nef") {
  CHECK(is_nef(DivisorClass{9, {3, 3, 3, 3, 1}}));
  CHECK_FALSE(is_nef(DivisorClass{3, {1, 1, 1, 1, -1}}));
  CHECK(is_nef(zero_class()));
}

TEST_CASE("in standard form, nef is exactly b5 >= 0") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const DivisorClass std_form = normalize(random_class(rng, 30)).standard;
    CHECK(is_nef(std_form) == (std_form.b[4] >= 0));
  }
}

TEST_CASE("is_big") {
  CHECK(is_big(DivisorClass{9, {3, 3, 3, 3, 1}}));
  for (const ConicClass& q : all_conics()) CHECK_FALSE(is_big(q.cls));
  CHECK(is_big(canonical_class()));
}

TEST_CASE("is_effective") {
  CHECK(is_effective(DivisorClass{3, {1, 1, 1, 1, -1}}));
  CHECK_FALSE(is_effective(DivisorClass{-1, {0, 0, 0, 0, 0}}));
  CHECK(is_effective(DivisorClass{0, {0, 0, 0, 0, -2}}));
  CHECK(is_effective(zero_class()));
}

TEST_CASE("is_effective agrees with the monoid oracle on a small box") {
  const testing::EffectivityOracle oracle(3);
  DivisorClass d;
  for (d.a = -3; d.a <= 3; ++d.a)
    for (d.b[0] = -3; d.b[0] <= 3; ++d.b[0])
      for (d.b[1] = -3; d.b[1] <= 3; ++d.b[1])
        for (d.b[2] = -3; d.b[2] <= 3; ++d.b[2])
          for (d.b[3] = -3; d.b[3] <= 3; ++d.b[3])
            for (d.b[4] = -3; d.b[4] <= 3; ++d.b[4]) {
              REQUIRE(is_effective(d) == oracle.effective(d));
            }
}

TEST_CASE("nef implies effective") {
  // sample standard classes with b5 >= 0, which are exactly the nef ones
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<Coeff> bdist(0, 5);
  std::uniform_int_distribution<Coeff> slack(0, 5);
  for (int i = 0; i < 2000; ++i) {
    DivisorClass x;
    for (Coeff& bi : x.b) bi = bdist(rng);
    std::sort(x.b.begin(), x.b.end(), std::greater<>());
    x.a = x.b[0] + x.b[1] + x.b[2] + slack(rng);
    REQUIRE(is_standard(x));
    REQUIRE(is_nef(x));
    CHECK(is_effective(x));
  }
}

TEST_CASE("zariski decomposition") {
  SUBCASE("single fixed line") {
    const auto z = zariski_decompose(DivisorClass{3, {1, 1, 1, 1, -1}});
    CHECK(z.nef_part == DivisorClass{3, {1, 1, 1, 1, 0}});
    REQUIRE(z.fixed_part.size() == 1);
    CHECK(z.fixed_part[0].line.cls == DivisorClass{0, {0, 0, 0, 0, -1}});
    CHECK(z.fixed_part[0].mult == 1);
  }
  SUBCASE("two fixed lines") {
    const auto z = zariski_decompose(DivisorClass{4, {2, 1, 1, -1, -1}});
    CHECK(z.nef_part == DivisorClass{4, {2, 1, 1, 0, 0}});
    REQUIRE(z.fixed_part.size() == 2);
    CHECK(z.fixed_part[0].line.cls == DivisorClass{0, {0, 0, 0, -1, 0}});
    CHECK(z.fixed_part[1].line.cls == DivisorClass{0, {0, 0, 0, 0, -1}});
    CHECK(z.fixed_part[0].mult == 1);
    CHECK(z.fixed_part[1].mult == 1);
  }
  SUBCASE("nef classes decompose trivially") {
    const auto z = zariski_decompose(DivisorClass{9, {3, 3, 3, 3, 1}});
    CHECK(z.nef_part == DivisorClass{9, {3, 3, 3, 3, 1}});
    CHECK(z.fixed_part.empty());
    const auto z0 = zariski_decompose(zero_class());
    CHECK(z0.nef_part == zero_class());
    CHECK(z0.fixed_part.empty());
  }
  SUBCASE("precondition") {
    CHECK_THROWS_AS(zariski_decompose(DivisorClass{-1, {0, 0, 0, 0, 0}}),
                    NotEffectiveError);
  }
}

TEST_CASE("zariski reassembly and orthogonality on random effective classes") {
  std::mt19937_64 rng(33);
  int effective_seen = 0;
  for (int i = 0; i < 5000; ++i) {
    const DivisorClass x = random_class(rng, 6);
    if (!is_effective(x)) continue;
    ++effective_seen;
    const ZariskiDecomposition z = zariski_decompose(x);
    DivisorClass sum = z.nef_part;
    for (const FixedPartEntry& e : z.fixed_part) {
      CHECK(intersect(z.nef_part, e.line.cls) == 0);
      sum = add(sum, scale(e.line.cls, e.mult));
    }
    CHECK(sum == x);
    CHECK(is_nef(z.nef_part));
    CHECK(euler_char(z.nef_part) >= 1);  // nef classes have chi = h0 >= 1
  }
  CHECK(effective_seen > 200);
}

TEST_CASE("conic_multiple") {
  const auto two_q = conic_multiple(DivisorClass{2, {2, 0, 0, 0, 0}});
  REQUIRE(two_q.has_value());
  CHECK(two_q->first == 2);
  CHECK(two_q->second.cls == DivisorClass{1, {1, 0, 0, 0, 0}});

  CHECK_FALSE(conic_multiple(DivisorClass{9, {3, 3, 3, 3, 1}}).has_value());

  const auto one_q = conic_multiple(DivisorClass{1, {1, 0, 0, 0, 0}});
  REQUIRE(one_q.has_value());
  CHECK(one_q->first == 1);
  CHECK(one_q->second.cls == DivisorClass{1, {1, 0, 0, 0, 0}});
}

TEST_CASE("h0_fixed_part") {
  const LineClass e5(DivisorClass{0, {0, 0, 0, 0, -1}});
  const LineClass e4(DivisorClass{0, {0, 0, 0, -1, 0}});
  CHECK(h0_fixed_part({{e5, 1}}) == 1);
  CHECK(h0_fixed_part({{e5, 2}}) == 3);
  CHECK(h0_fixed_part({{e4, 1}, {e5, 1}}) == 2);
  CHECK(h0_fixed_part({}) == 0);

  const LineClass e1(DivisorClass{0, {-1, 0, 0, 0, 0}});
  const LineClass l12(DivisorClass{1, {1, 1, 0, 0, 0}});
  CHECK(intersect(e1.cls, l12.cls) != 0);
  CHECK_THROWS_AS(h0_fixed_part({{e1, 1}, {l12, 1}}), LinesNotDisjointError);
  CHECK_THROWS_AS(h0_fixed_part({{e5, 0}}), DomainError);
}
