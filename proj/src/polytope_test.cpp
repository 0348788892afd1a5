#include "isex/polytope.hpp"

#include <algorithm>

#include <gtest/gtest.h>

namespace isex {
namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

std::vector<RationalVector> sorted(std::vector<RationalVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(VertexEnumerator, StartsAtTheStandardSimplex) {
  VertexEnumerator e(3);
  EXPECT_EQ(sorted(e.vertices()), sorted({{r(1), r(0), r(0)}, {r(0), r(1), r(0)}, {r(0), r(0), r(1)}}));
}

TEST(VertexEnumerator, InequalityCutsACorner) {
  VertexEnumerator e(3);
  e.add_inequality({r(1), r(0), r(0)}, r(1, 2));
  EXPECT_EQ(sorted(e.vertices()), sorted({{r(0), r(1), r(0)},
                                          {r(0), r(0), r(1)},
                                          {r(1, 2), r(1, 2), r(0)},
                                          {r(1, 2), r(0), r(1, 2)}}));
}

TEST(VertexEnumerator, EqualitySlicesToAnEdge) {
  VertexEnumerator e(3);
  e.add_equality({r(1), r(-1), r(0)}, r(0));
  EXPECT_EQ(sorted(e.vertices()), sorted({{r(0), r(0), r(1)}, {r(1, 2), r(1, 2), r(0)}}));
}

TEST(VertexEnumerator, RedundantCutChangesNothing) {
  VertexEnumerator e(4);
  const auto before = sorted(e.vertices());
  e.add_inequality({r(1), r(1), r(0), r(0)}, r(1));
  EXPECT_EQ(sorted(e.vertices()), before);
}

TEST(VertexEnumerator, InfeasibleCutEmpties) {
  VertexEnumerator e(2);
  e.add_inequality({r(1), r(1)}, r(1, 2));
  EXPECT_TRUE(e.empty());
}

TEST(VertexEnumerator, NonAdjacentPairsDoNotCross) {
  // Square-ish section of the 4-simplex: x0 + x1 <= 1/2 then x0 + x2 <= 1/2.
  VertexEnumerator e(4);
  e.add_inequality({r(1), r(1), r(0), r(0)}, r(1, 2));
  e.add_inequality({r(1), r(0), r(1), r(0)}, r(1, 2));
  for (const auto& v : e.vertices()) {
    EXPECT_LE(v[0] + v[1], r(1, 2));
    EXPECT_LE(v[0] + v[2], r(1, 2));
    EXPECT_EQ(v[0] + v[1] + v[2] + v[3], r(1));
  }
  // Vertices: (0,0,0,1), (1/2,0,0,1/2), (0,1/2,0,1/2), (0,0,1/2,1/2), (0,1/2,1/2,0)
  EXPECT_EQ(e.vertices().size(), 5u);
}

}  // namespace
}  // namespace isex
