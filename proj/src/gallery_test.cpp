#include "isex/gallery.hpp"

#include <gtest/gtest.h>

#include "isex/error.hpp"
#include "isex/io.hpp"
#include "isex/periods.hpp"
#include "test_support.hpp"

namespace isex {
namespace {

using testing::pv;
using testing::table_of;

TEST(GenCycle, Examples) {
  const GallerySystem one = gen_cycle(1);
  EXPECT_EQ(period_of(one.credal, one.map), 1u);
  const GallerySystem two = gen_cycle(2);
  EXPECT_EQ(two.map, testing::swap_map());
  EXPECT_EQ(two.credal, testing::point_masses(2));
  const ComponentTable six = table_of(gen_cycle(6).map, gen_cycle(6).credal);
  EXPECT_EQ(period_of(six.system()), 6u);
  EXPECT_EQ(period_of_component(six, 4), 2u);
  EXPECT_EQ(six.theta(1), testing::hull({ProbVec::uniform(6)}));
  EXPECT_THROW(gen_cycle(0), Error);
}

TEST(GenProductShift, SingleMarginalIsLinear) {
  const GallerySystem g = gen_product_shift(3, 2, {pv({"1/2", "1/4", "1/4"})});
  EXPECT_EQ(g.credal.size(), 1u);
  EXPECT_EQ(period_of(g.credal, g.map), 1u);
}

TEST(GenProductShift, TwoBernoulliMarginals) {
  const GallerySystem g = gen_product_shift(2, 2, {pv({"2/3", "1/3"}), pv({"1/3", "2/3"})});
  ASSERT_EQ(g.credal.size(), 4u);
  const Permutation pi = pushforward_permutation(g.credal, g.map);
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < 4; ++i) fixed += pi(i) == i;
  EXPECT_EQ(fixed, 2u);
  EXPECT_EQ(pi.order(), 2u);
  const ComponentTable table = table_of(g.map, g.credal);
  EXPECT_TRUE(membership(pv({"2/9", "5/18", "5/18", "2/9"}), table.theta(1)));
  EXPECT_TRUE(table.theta(1).index_of(pv({"2/9", "5/18", "5/18", "2/9"})).has_value());
}

TEST(GenProductShift, PeriodOfComponentsFollowsDivisorsOfWordLength) {
  for (std::size_t m : {2, 3, 4}) {
    const GallerySystem g = gen_product_shift(2, m, {pv({"3/4", "1/4"}), pv({"1/4", "3/4"})});
    const ComponentTable table(InvariantSystem(g.map, g.credal), Limits{16, 16, 64});
    EXPECT_EQ(period_of(table.system()), m);
    for (std::uint64_t d : divisors(m)) EXPECT_EQ(period_of_component(table, d), d) << "m=" << m;
    const Observable f = indicator(g.map.size(), std::vector<State>{0});
    EXPECT_GT(upper_expectation(g.credal, f), -upper_expectation(g.credal, -f));
  }
}

TEST(GenProductShift, Caps) {
  EXPECT_THROW(gen_product_shift(2, 13, {pv({"1/2", "1/2"})}), Error);
  EXPECT_THROW(gen_product_shift(1, 2, {pv({"1"})}), Error);
  EXPECT_THROW(gen_product_shift(2, 2, {pv({"1/3", "1/3", "1/3"})}), Error);
}

TEST(GenRandomInvariant, Deterministic) {
  const GallerySystem a = gen_random_invariant(6, 3, 99);
  const GallerySystem b = gen_random_invariant(6, 3, 99);
  EXPECT_EQ(serialize_system({a.map, a.credal, a.label}), serialize_system({b.map, b.credal, b.label}));
}

TEST(GenRandomInvariant, AlwaysInvariant) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    try {
      const GallerySystem g = gen_random_invariant(1 + seed % 9, 1 + seed % 4, seed);
      EXPECT_TRUE(check_invariance(g.credal, g.map).invariant) << g.label;
      EXPECT_TRUE(g.credal.canonical());
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
    }
  }
  const GallerySystem g = gen_random_invariant(5, 3, 42);
  const ComponentTable table = table_of(g.map, g.credal);
  for (std::uint64_t d = 1; d <= 6; ++d) {
    for (std::uint64_t l = 2 * d; l <= 6; l += d) EXPECT_TRUE(check_monotone_inclusion(table, d, l).holds);
    EXPECT_TRUE(check_period_lattice(table, d).holds);
  }
}

TEST(GenRandomInvariant, SingleDrawUnderIdentityStaysSingle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GallerySystem g = gen_random_invariant(4, 1, seed);
    if (g.map != SystemMap::identity(4)) continue;
    EXPECT_EQ(g.credal.size(), 1u);
  }
}

}  // namespace
}  // namespace isex
