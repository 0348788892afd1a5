#include "isex/exact_lp.hpp"

#include <gtest/gtest.h>

namespace isex {
namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

TEST(SolveFeasibility, FindsNonnegativeSolution) {
  // x + y = 1, x - y = 1/2
  const RationalMatrix a = {{r(1), r(1)}, {r(1), r(-1)}};
  const RationalVector b = {r(1), r(1, 2)};
  const FeasibilityResult res = solve_feasibility(a, b);
  ASSERT_TRUE(res.feasible);
  EXPECT_EQ(res.solution[0], r(3, 4));
  EXPECT_EQ(res.solution[1], r(1, 4));
}

TEST(SolveFeasibility, InfeasibleYieldsFarkasCertificate) {
  // x + y = 1, x + y = 2 has no solution.
  const RationalMatrix a = {{r(1), r(1)}, {r(1), r(1)}};
  const RationalVector b = {r(1), r(2)};
  const FeasibilityResult res = solve_feasibility(a, b);
  ASSERT_FALSE(res.feasible);
  for (std::size_t j = 0; j < 2; ++j) {
    Rational col = res.certificate[0] * a[0][j] + res.certificate[1] * a[1][j];
    EXPECT_LE(col, 0);
  }
  EXPECT_GT(dot(res.certificate, b), 0);
}

TEST(SolveFeasibility, SignConstraintBlocksSolution) {
  // x - y = -1 with x, y >= 0 is feasible; -x = 1 is not.
  EXPECT_TRUE(solve_feasibility({{r(1), r(-1)}}, {r(-1)}).feasible);
  const FeasibilityResult res = solve_feasibility({{r(-1)}}, {r(1)});
  ASSERT_FALSE(res.feasible);
  EXPECT_LE(res.certificate[0] * r(-1), 0);
  EXPECT_GT(res.certificate[0], 0);
}

TEST(SolveFeasibility, DegenerateRowsAreHandled) {
  const RationalMatrix a = {{r(1), r(0), r(1)}, {r(2), r(0), r(2)}, {r(0), r(1), r(0)}};
  const FeasibilityResult res = solve_feasibility(a, {r(1), r(2), r(0)});
  ASSERT_TRUE(res.feasible);
  EXPECT_EQ(res.solution[0] + res.solution[2], r(1));
  EXPECT_EQ(res.solution[1], r(0));
}

}  // namespace
}  // namespace isex
