#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sitepc/enumeration.hpp"
#include "sitepc/errors.hpp"

using namespace sitepc;
using R = Rational;

TEST(WalkCounts, MatchBruteForce) {
  for (int d = 1; d <= 3; ++d) {
    for (int m = 0; m <= 5; ++m) {
      const auto table = walk_counts(d, m);
      for (const auto& x : ball(d, m)) {
        EXPECT_EQ(table.at(x), oracle::walk_count(d, m, x)) << d << " " << m << " " << to_string(x);
      }
    }
  }
}

TEST(WalkCounts, TotalIsOmegaToTheM) {
  const auto table = walk_counts(4, 6);
  BigInt total = 0;
  for (const auto& [x, n] : table.counts) total += n;
  EXPECT_EQ(total, BigInt(8 * 8 * 8 * 8 * 8 * 8));
  EXPECT_EQ(table.at(Point{7, 0, 0, 0}), 0);
}

TEST(WalkCounts, SymmetricUnderPermutationAndSignFlip) {
  const auto table = walk_counts(3, 6);
  for (const auto& x : ball(3, 6)) {
    std::vector<int> c = x.coords();
    const BigInt base = table.at(x);
    std::sort(c.begin(), c.end());
    do {
      for (int flips = 0; flips < 8; ++flips) {
        std::vector<int> y = c;
        for (int a = 0; a < 3; ++a) {
          if (flips >> a & 1) y[static_cast<std::size_t>(a)] = -y[static_cast<std::size_t>(a)];
        }
        ASSERT_EQ(table.at(Point(y)), base);
      }
    } while (std::next_permutation(c.begin(), c.end()));
  }
}

TEST(WalkCounts, BudgetAndRangeErrors) {
  EXPECT_THROW(walk_counts(9, 9, 1000), ResourceError);
  EXPECT_THROW(walk_counts(3, 70), ResourceError);
  EXPECT_THROW(walk_counts(0, 2), DomainError);
}

TEST(ClassCount, FormulaMatchesEnumeration) {
  for (int d = 1; d <= 6; ++d) {
    for (int l1 = 0; l1 <= 4; ++l1) {
      for (int linf = 0; linf <= l1; ++linf) {
        EXPECT_EQ(class_count(d, l1, linf), class_count_by_enumeration(d, l1, linf)) << d << " " << l1 << " " << linf;
      }
    }
  }
}

TEST(ClassCount, SectionFiveClasses) {
  for (int d = 3; d <= 6; ++d) {
    const BigInt omega = 2 * d;
    EXPECT_EQ(class_count(d, 1, 1), omega);
    EXPECT_EQ(class_count(d, 2, 1), omega * (omega - 2) / 2);
    EXPECT_EQ(class_count(d, 3, 1), omega * (omega - 2) * (omega - 4) / 6);
    EXPECT_EQ(class_count(d, 2, 2), omega);
  }
}

TEST(OmegaPolynomial, ReproducesClassFormulas) {
  const auto two = polynomial_in_omega([](int d) { return class_count(d, 2, 1); }, 2, 2);
  EXPECT_EQ(two.coefficients, (std::vector<R>{0, -1, R(1, 2)}));
  const auto three = polynomial_in_omega([](int d) { return class_count(d, 3, 1); }, 3, 3);
  EXPECT_EQ(three.coefficients, (std::vector<R>{0, R(4, 3), -1, R(1, 6)}));
  EXPECT_EQ(two(R(6)), R(12));
  EXPECT_EQ(two.degree(), 2);
}

TEST(OmegaPolynomial, HeldOutDimensionCatchesNonPolynomials) {
  EXPECT_THROW(polynomial_in_omega([](int d) { return BigInt(1) << d; }, 2, 1), NotPolynomialError);
}

TEST(Cycles, SixCyclesThroughCubeCorner) {
  const auto f = enumerate_cycles(3, Point{1, 1, 1}, 6);
  EXPECT_EQ(f.size(), 9u);
  EXPECT_EQ(f.interior_sites().size(), 6u);
  for (const auto& in : f.interiors) EXPECT_EQ(in.size(), 4u);
}

TEST(Cycles, FourCycleThroughDiagonal) {
  const auto f = enumerate_cycles(3, Point{1, 1, 0}, 4);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.interiors[0], (std::vector<Point>{{0, 1, 0}, {1, 0, 0}}));
  EXPECT_EQ(enumerate_cycles(3, Point{2, 0, 0}, 4).size(), 0u);
}

TEST(Cycles, CountsMatchBruteForce) {
  for (int d = 2; d <= 3; ++d) {
    for (int len : {4, 6, 8}) {
      for (const auto& x : ball(d, len / 2)) {
        if (l1_norm(x) == 0) continue;
        EXPECT_EQ(enumerate_cycles(d, x, len).size(), oracle::cycle_count(d, x, len))
            << d << " " << len << " " << to_string(x);
      }
    }
  }
}

TEST(Cycles, Errors) {
  EXPECT_THROW(enumerate_cycles(3, Point{1, 1, 0}, 5), DomainError);
  EXPECT_THROW(enumerate_cycles(3, Point{1, 1, 0}, 10), DomainError);
  EXPECT_THROW(enumerate_cycles(3, Point{1, 1}, 4), GeometryError);
}

TEST(UnionProbability, SingleCycle) {
  const auto f = enumerate_cycles(2, Point{1, 1}, 4);
  EXPECT_EQ(union_occupation_probability(f), ProbabilityPolynomial({0, 0, 1}));
}

TEST(UnionProbability, DisjointInteriors) {
  CycleFamily f;
  f.base = Point{0, 0, 0};
  f.length = 8;
  f.interiors = {{{1, 0, 0}, {2, 0, 0}, {3, 0, 0}}, {{-1, 0, 0}, {-2, 0, 0}, {-3, 0, 0}}};
  f.cycles = f.interiors;
  EXPECT_EQ(union_occupation_probability(f), ProbabilityPolynomial({0, 0, 0, 2, 0, 0, -1}));
}

TEST(UnionProbability, CubeCornerFamily) {
  const auto f = enumerate_cycles(3, Point{1, 1, 1}, 6);
  const auto poly = union_occupation_probability(f);
  EXPECT_EQ(poly, ProbabilityPolynomial({0, 0, 0, 0, 9, -12, 4}));
  for (double p : {0.01, 0.1, 0.3, 0.5, 0.9}) EXPECT_NEAR(poly(p), oracle::union_probability(f, p), 1e-14);
}

TEST(UnionProbability, SmallFamiliesMatchBruteForce) {
  int checked = 0;
  for (int d = 2; d <= 3; ++d) {
    for (int len : {4, 6, 8}) {
      for (const auto& x : ball(d, len / 2)) {
        if (l1_norm(x) < 2) continue;
        for (const auto& f : {enumerate_cycles(d, x, len), enumerate_cycles_up_to(d, x, len)}) {
          if (f.size() == 0 || f.size() > 20 || f.interior_sites().size() > 14) continue;
          const auto poly = union_occupation_probability(f);
          for (double p : {0.02, 0.3, 0.7}) EXPECT_NEAR(poly(p), oracle::union_probability(f, p), 1e-12);
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(UnionProbability, ResourceLimit) {
  EXPECT_THROW(union_occupation_probability(enumerate_cycles_up_to(4, Point{1, 1, 0, 0}, 8)), ResourceError);
}

TEST(ProbabilityPolynomial, Printing) {
  EXPECT_EQ(ProbabilityPolynomial({0, 0, 0, 0, 9, -12, 4}).to_string(), "9*p^4 - 12*p^5 + 4*p^6");
  EXPECT_EQ(ProbabilityPolynomial().to_string(), "0");
  EXPECT_EQ(ProbabilityPolynomial({1, -1}).to_string(), "1 - p");
}
