#include "isex/decomposition.hpp"

#include <numeric>

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "isex/error.hpp"
#include "isex/random.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace isex {
namespace {

using testing::cycle_table;
using testing::delta;
using testing::hull;
using testing::obs;
using testing::point_masses;
using testing::pv;
using testing::q;
using testing::swap_map;
using testing::table_of;

TEST(InvariantSystem, RejectsNonInvariantSets) {
  try {
    InvariantSystem(swap_map(), hull({delta(2, 0)}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotInvariant);
    EXPECT_NE(std::string(e.what()).find("f = (1,0)"), std::string::npos) << e.what();
  }
}

TEST(ComponentTable, EnforcesCaps) {
  EXPECT_THROW(ComponentTable(InvariantSystem(SystemMap::cycle(13), point_masses(13))), Error);
  const ComponentTable t = cycle_table(3);
  EXPECT_THROW(t.theta(0), Error);
  EXPECT_THROW(t.theta(65), Error);
}

TEST(ThetaD, SwapExamples) {
  EXPECT_EQ(theta_d(point_masses(2), swap_map(), 1), hull({ProbVec::uniform(2)}));
  EXPECT_EQ(theta_d(point_masses(2), swap_map(), 2), point_masses(2));
  const CredalSet c = hull({pv({"1/3", "2/3"}), pv({"1/2", "1/2"})});
  for (std::uint64_t d = 1; d <= 4; ++d) EXPECT_EQ(theta_d(c, SystemMap::identity(2), d), c);
}

TEST(ThetaD, MatchesBasicSolutionOracle) {
  for (const auto& sys : testing::random_corpus(60)) {
    const ComponentTable table = table_of(sys.map, sys.credal);
    for (std::uint64_t d : {1, 2, 3, 4, 6}) {
      EXPECT_EQ(table.theta(d).generators(), oracle::invariant_vertices(sys.credal.generators(), sys.map, d))
          << sys.label << " d=" << d;
    }
  }
}

TEST(ThetaD, BothDirectionsOfTheCharacterization) {
  for (const auto& sys : testing::random_corpus(40)) {
    const ComponentTable table = table_of(sys.map, sys.credal);
    for (std::uint64_t d = 1; d <= 6; ++d) {
      const SystemMap step = compose_power(sys.map, d);
      for (const auto& p : table.theta(d).generators()) {
        EXPECT_EQ(pushforward(p, step), p);
        EXPECT_TRUE(membership(p, sys.credal));
      }
      for (const auto& g : sys.credal.generators()) {
        if (pushforward(g, step) == g) EXPECT_TRUE(membership(g, table.theta(d)));
      }
    }
  }
}

TEST(EdLp, Examples) {
  const Observable f = obs({"1", "0"});
  EXPECT_EQ(e_d_lp(point_masses(2), swap_map(), 1, f), q("1/2"));
  EXPECT_EQ(e_d_lp(point_masses(2), swap_map(), 2, f), 1);
  const ProbVec p = pv({"1/4", "1/4", "1/2"});
  const Observable g = obs({"3", "-1", "2"});
  for (std::uint64_t d = 1; d <= 3; ++d) EXPECT_EQ(e_d_lp(hull({p}), SystemMap::identity(3), d, g), p.expectation(g));
}

TEST(EdClosedForm, Examples) {
  const Observable f = obs({"1", "0"});
  EXPECT_EQ(e_d_closed_form(point_masses(2), swap_map(), 1, f), q("1/2"));
  const CredalSet c = hull({pv({"1/3", "2/3"}), pv({"3/4", "1/4"})});
  for (std::uint64_t d = 1; d <= 3; ++d) {
    EXPECT_EQ(e_d_closed_form(c, SystemMap::identity(2), d, f), upper_expectation(c, f));
  }
  EXPECT_EQ(e_d_closed_form(point_masses(3), SystemMap::cycle(3), 1, obs({"1", "0", "0"})), q("1/3"));
}

TEST(CesaroUpper, Examples) {
  const Observable f = obs({"1", "0"});
  EXPECT_EQ(cesaro_upper(point_masses(2), swap_map(), 1, f, 1), 1);
  EXPECT_EQ(cesaro_upper(point_masses(2), swap_map(), 1, f, 2), q("1/2"));
  const CredalSet c = hull({pv({"1/3", "2/3"}), pv({"3/4", "1/4"})});
  for (std::uint64_t n = 1; n <= 5; ++n) EXPECT_EQ(cesaro_upper(c, SystemMap::identity(2), 2, f, n), q("3/4"));
}

TEST(EdRoutes, AgreeOnRandomSystems) {
  Rng rng(3);
  for (const auto& sys : testing::random_corpus(60)) {
    const ComponentTable table = table_of(sys.map, sys.credal);
    for (int i = 0; i < 3; ++i) {
      const Observable f = random_observable(sys.map.size(), rng);
      for (std::uint64_t d : {1, 2, 3, 4, 6}) {
        const Rational lp = e_d_lp(table, d, f);
        EXPECT_EQ(lp, e_d_closed_form(table, d, f));
        const OrbitStructure o = orbit_structure(compose_power(sys.map, d));
        for (std::uint64_t n = 1; n <= o.transient_length + 5 * o.period; ++n) {
          EXPECT_GE(cesaro_upper(table, d, f, n), lp);
        }
        EXPECT_EQ(e_d_lp(table, d, compose(f, sys.map)), lp);
      }
    }
  }
}

TEST(CesaroUpper, PartialSumsAreSubadditive) {
  Rng rng(9);
  for (const auto& sys : testing::random_corpus(25)) {
    const ComponentTable table = table_of(sys.map, sys.credal);
    const Observable f = random_observable(sys.map.size(), rng);
    for (std::uint64_t d : {1, 2}) {
      auto a = [&](std::uint64_t n) { return Rational(n) * cesaro_upper(table, d, f, n); };
      for (std::uint64_t m = 1; m <= 4; ++m) {
        for (std::uint64_t n = 1; n <= 4; ++n) EXPECT_LE(a(m + n), a(m) + a(n));
      }
    }
  }
}

TEST(ShiftIdentity, Examples) {
  const ComponentTable swap = table_of(swap_map(), point_masses(2));
  const auto zero = check_shift_identity(swap, 1, obs({"1", "0"}), obs({"0", "0"}));
  EXPECT_TRUE(zero.holds);
  const auto s = check_shift_identity(swap, 1, obs({"1", "0"}), obs({"5", "-2"}));
  EXPECT_TRUE(s.holds);
  EXPECT_EQ(s.shifted, q("1/2"));
  EXPECT_EQ(s.plain, q("1/2"));
  const auto c3 = check_shift_identity(cycle_table(3), 3, obs({"1", "0", "0"}), obs({"1", "2", "3"}));
  EXPECT_TRUE(c3.holds);
  EXPECT_EQ(c3.plain, 1);
}

TEST(MonotoneInclusion, Examples) {
  const ComponentTable swap = table_of(swap_map(), point_masses(2));
  EXPECT_TRUE(check_monotone_inclusion(swap, 1, 2).holds);
  EXPECT_TRUE(check_monotone_inclusion(swap, 2, 2).holds);
  EXPECT_TRUE(check_monotone_inclusion(cycle_table(3), 1, 3).holds);
  EXPECT_THROW(check_monotone_inclusion(swap, 2, 3), Error);
}

TEST(GcdReduction, Examples) {
  const ComponentTable c3 = cycle_table(3);
  EXPECT_TRUE(check_gcd_reduction(c3, 2, 2).holds);
  const auto r = check_gcd_reduction(c3, 2, 3);
  EXPECT_TRUE(r.precondition_met);
  EXPECT_EQ(r.gcd, 1u);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(c3.theta(2), hull({ProbVec::uniform(3)}));

  const ComponentTable c6 = cycle_table(6);
  const auto r6 = check_gcd_reduction(c6, 4, 6);
  EXPECT_TRUE(r6.precondition_met);
  EXPECT_EQ(r6.gcd, 2u);
  EXPECT_TRUE(r6.holds);
  EXPECT_EQ(c6.theta(4), c6.theta(2));

  EXPECT_FALSE(check_gcd_reduction(c6, 2, 3).precondition_met);
}

TEST(IteratedDecomposition, Examples) {
  const ComponentTable c6 = cycle_table(6);
  for (std::uint64_t l = 1; l <= 6; ++l) EXPECT_TRUE(check_iterated_decomposition(c6, 1, l).holds);
  const auto swap = check_iterated_decomposition(table_of(swap_map(), point_masses(2)), 2, 3);
  EXPECT_TRUE(swap.holds);
  EXPECT_EQ(swap.reduced, hull({ProbVec::uniform(2)}));
  const auto r = check_iterated_decomposition(c6, 4, 6);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.nested, c6.theta(2));
}

}  // namespace
}  // namespace isex
