#include "isex/credal_set.hpp"

#include <gtest/gtest.h>

#include "corpus.hpp"
#include "isex/error.hpp"
#include "isex/random.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace isex {
namespace {

using testing::delta;
using testing::hull;
using testing::map_of;
using testing::obs;
using testing::point_masses;
using testing::pv;
using testing::q;
using testing::swap_map;

ErrorKind kind_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInvalidArgument;
}

TEST(ProbVec, RejectsNonProbabilities) {
  EXPECT_EQ(kind_of([] { pv({"1/2", "1/3"}); }), ErrorKind::kNotAProbability);
  EXPECT_EQ(kind_of([] { pv({"3/2", "-1/2"}); }), ErrorKind::kNotAProbability);
  EXPECT_EQ(kind_of([] { ProbVec(RationalVector{}); }), ErrorKind::kNotAProbability);
}

TEST(UpperExpectation, Examples) {
  EXPECT_EQ(upper_expectation(point_masses(2), obs({"3", "5"})), 5);
  EXPECT_EQ(upper_expectation(hull({ProbVec::uniform(2)}), obs({"1", "0"})), q("1/2"));
  EXPECT_EQ(upper_expectation(hull({pv({"1/3", "2/3"}), pv({"3/4", "1/4"})}), obs({"1", "0"})), q("3/4"));
  EXPECT_EQ(kind_of([] { upper_expectation(point_masses(2), obs({"1", "2", "3"})); }),
            ErrorKind::kDimensionMismatch);
}

TEST(UpperProbability, Examples) {
  const CredalSet c = point_masses(2);
  EXPECT_EQ(upper_probability(c, {}), 0);
  const State zero[] = {0};
  EXPECT_EQ(upper_probability(c, zero), 1);
  EXPECT_EQ(upper_probability(hull({pv({"1/3", "2/3"})}), zero), q("1/3"));
  const State bad[] = {2};
  EXPECT_EQ(kind_of([&] { upper_probability(c, bad); }), ErrorKind::kInvalidState);
}

TEST(UpperExpectation, IsSublinearOnRandomInstances) {
  Rng rng(7);
  for (const auto& sys : testing::random_corpus(30)) {
    const std::size_t n = sys.map.size();
    const Observable f = random_observable(n, rng);
    const Observable g = random_observable(n, rng);
    const Rational lambda(rng.below(5), 1 + rng.below(3));
    EXPECT_LE(upper_expectation(sys.credal, f + g), upper_expectation(sys.credal, f) + upper_expectation(sys.credal, g));
    EXPECT_EQ(upper_expectation(sys.credal, lambda * f), lambda * upper_expectation(sys.credal, f));
    EXPECT_EQ(upper_expectation(sys.credal, constant_observable(n, q("-7/3"))), q("-7/3"));
    EXPECT_EQ(upper_expectation(sys.credal, f), oracle::upper(sys.credal.generators(), f));
  }
}

TEST(Pushforward, Examples) {
  const ProbVec p = pv({"1/5", "3/5", "1/5"});
  EXPECT_EQ(pushforward(p, SystemMap::identity(3)), p);
  EXPECT_EQ(pushforward(delta(3, 0), SystemMap::cycle(3)), delta(3, 1));
  EXPECT_EQ(pushforward(pv({"1/2", "1/2", "0"}), map_of({2, 2, 0})), delta(3, 2));
  EXPECT_EQ(kind_of([&] { pushforward(p, SystemMap::cycle(2)); }), ErrorKind::kDimensionMismatch);
}

TEST(Pushforward, PowersAdd) {
  const SystemMap t = map_of({2, 0, 4, 4, 1});
  const ProbVec p = pv({"1/7", "2/7", "0", "3/7", "1/7"});
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      EXPECT_EQ(pushforward(pushforward(p, compose_power(t, a)), compose_power(t, b)),
                pushforward(p, compose_power(t, a + b)));
    }
  }
}

TEST(ExtremePoints, Examples) {
  EXPECT_EQ(extreme_points({delta(2, 0), delta(2, 1), ProbVec::uniform(2)}).generators(),
            (std::vector<ProbVec>{delta(2, 1), delta(2, 0)}));
  EXPECT_EQ(extreme_points({pv({"1/3", "2/3"})}).size(), 1u);
  EXPECT_EQ(extreme_points({delta(3, 0), delta(3, 1), delta(3, 2)}).size(), 3u);
  EXPECT_EQ(kind_of([] { extreme_points({}); }), ErrorKind::kEmptyInput);
}

TEST(ExtremePoints, AgreesWithBruteForceAndIsIdempotent) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(3);
    std::vector<ProbVec> points;
    const std::size_t m = 1 + rng.below(7);
    for (std::size_t i = 0; i < m; ++i) points.push_back(random_probability(n, rng));
    const CredalSet c = extreme_points(points);
    EXPECT_EQ(c.generators(), oracle::extreme_subset(points));
    EXPECT_EQ(extreme_points(c.generators()), c);
    for (const auto& p : points) EXPECT_TRUE(membership(p, c));
  }
}

TEST(Membership, Examples) {
  EXPECT_TRUE(membership(ProbVec::uniform(2), point_masses(2)));
  EXPECT_FALSE(membership(delta(3, 2), hull({delta(3, 0), delta(3, 1)})));
  EXPECT_TRUE(membership(pv({"2/3", "1/3"}), hull({pv({"1/3", "2/3"}), pv({"3/4", "1/4"})})));
  EXPECT_FALSE(membership(pv({"4/5", "1/5"}), hull({pv({"1/3", "2/3"}), pv({"3/4", "1/4"})})));
}

TEST(Membership, AgreesWithBruteForce) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng.below(3);
    std::vector<ProbVec> points;
    for (std::size_t i = 0; i < 1 + rng.below(5); ++i) points.push_back(random_probability(n, rng));
    const ProbVec p = random_probability(n, rng);
    EXPECT_EQ(membership(p, extreme_points(points)), oracle::in_hull(p, points));
  }
}

TEST(CheckInvariance, Examples) {
  EXPECT_TRUE(check_invariance(point_masses(2), swap_map()).invariant);

  const InvarianceVerdict v = check_invariance(hull({delta(2, 0)}), swap_map());
  EXPECT_FALSE(v.invariant);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(*v.witness, obs({"1", "0"}));
  EXPECT_EQ(v.upper_of_witness, 1);
  EXPECT_EQ(v.upper_of_shifted_witness, 0);

  EXPECT_TRUE(check_invariance(hull({pv({"1/3", "2/3"}), pv({"1/2", "1/2"})}), SystemMap::identity(2)).invariant);
}

TEST(CheckInvariance, WitnessSeparatesWhenNoIndicatorDoes) {
  // Every single-state indicator has the same upper value before and after the shift.
  const CredalSet c = hull({pv({"1/2", "1/2", "0", "0"}), pv({"0", "0", "1/2", "1/2"})});
  const SystemMap t = map_of({0, 2, 1, 3});
  const InvarianceVerdict v = check_invariance(c, t);
  ASSERT_FALSE(v.invariant);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_NE(upper_expectation(c, *v.witness), upper_expectation(c, compose(*v.witness, t)));
  EXPECT_EQ(v.upper_of_witness, upper_expectation(c, *v.witness));
}

TEST(PushforwardPermutation, Examples) {
  const Permutation swap = pushforward_permutation(point_masses(2), swap_map());
  EXPECT_EQ(swap.mapping(), (std::vector<std::size_t>{1, 0}));
  EXPECT_EQ(swap.order(), 2u);

  const CredalSet c = hull({pv({"1/3", "2/3"}), pv({"1/2", "1/2"})});
  EXPECT_TRUE(pushforward_permutation(c, SystemMap::identity(2)).is_identity());

  const Permutation rot = pushforward_permutation(point_masses(3), SystemMap::cycle(3));
  EXPECT_EQ(rot.order(), 3u);
  EXPECT_EQ(rot.cycles().size(), 1u);

  EXPECT_EQ(kind_of([] { pushforward_permutation(hull({delta(2, 0)}), swap_map()); }), ErrorKind::kNotInvariant);
}

TEST(PushforwardPermutation, RecanonicalizedPushforwardReproducesTheSet) {
  for (const auto& sys : testing::random_corpus(40)) {
    const Permutation pi = pushforward_permutation(sys.credal, sys.map);
    std::vector<ProbVec> pushed;
    for (const auto& g : sys.credal.generators()) pushed.push_back(pushforward(g, sys.map));
    EXPECT_EQ(extreme_points(pushed), sys.credal);
    for (std::size_t i = 0; i < sys.credal.size(); ++i) {
      EXPECT_EQ(pushforward(sys.credal[i], sys.map), sys.credal[pi(i)]);
    }
  }
}

TEST(InvariantSurrogate, Examples) {
  const ProbVec p = pv({"1/4", "3/4"});
  EXPECT_EQ(invariant_surrogate(hull({p}), SystemMap::identity(2), p), p);
  EXPECT_EQ(invariant_surrogate(point_masses(2), swap_map(), delta(2, 0)), ProbVec::uniform(2));
  EXPECT_EQ(invariant_surrogate(point_masses(3), SystemMap::cycle(3), delta(3, 0)), ProbVec::uniform(3));
  EXPECT_EQ(kind_of([] { invariant_surrogate(hull({delta(3, 0), delta(3, 1)}), SystemMap::identity(3), delta(3, 2)); }),
            ErrorKind::kNotMember);
}

TEST(InvariantSurrogate, AgreesOnInvariantAtomsAndIsFixed) {
  for (const auto& sys : testing::random_corpus(40)) {
    const InvariantPartition atoms = invariant_partition(sys.map, 1);
    for (const auto& g : sys.credal.generators()) {
      const ProbVec s = invariant_surrogate(sys.credal, sys.map, g);
      EXPECT_EQ(pushforward(s, sys.map), s);
      EXPECT_TRUE(membership(s, sys.credal));
      for (const auto& atom : atoms.atoms) EXPECT_EQ(s.probability(atom), g.probability(atom));
    }
  }
}

TEST(CoreOfCapacity, Examples) {
  const ProbVec p = pv({"1/6", "1/3", "1/2"});
  EXPECT_EQ(core_of_capacity(hull({p})), hull({p}));
  EXPECT_EQ(core_of_capacity(point_masses(2)), point_masses(2));

  // V({0, 2}) = 1/2 forces P(1) = 1/2, so the core adds nothing here.
  const CredalSet edge = hull({pv({"1/2", "1/2", "0"}), pv({"0", "1/2", "1/2"})});
  EXPECT_EQ(core_of_capacity(edge), edge);
  EXPECT_FALSE(membership(pv({"1/2", "0", "1/2"}), core_of_capacity(edge)));

  const CredalSet c = hull({delta(3, 0), pv({"0", "1/2", "1/2"})});
  const CredalSet core = core_of_capacity(c);
  EXPECT_TRUE(is_subset(c, core));
  EXPECT_FALSE(is_subset(core, c));
  EXPECT_EQ(core, hull({delta(3, 0), pv({"1/2", "1/2", "0"}), pv({"1/2", "0", "1/2"}), pv({"0", "1/2", "1/2"})}));

  EXPECT_EQ(kind_of([] { core_of_capacity(point_masses(11)); }), ErrorKind::kStateCapExceeded);
}

TEST(CoreOfCapacity, MatchesBruteForceAndPreservesTheCapacity) {
  for (const auto& sys : testing::random_corpus(60)) {
    const std::size_t n = sys.map.size();
    if (n > 6) continue;
    const CredalSet core = core_of_capacity(sys.credal);
    EXPECT_TRUE(is_subset(sys.credal, core));
    if (n <= 4) EXPECT_EQ(core.generators(), oracle::core_vertices(sys.credal.generators()));
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<State> a;
      for (State x = 0; x < n; ++x) {
        if ((mask >> x) & 1) a.push_back(x);
      }
      EXPECT_EQ(upper_probability(core, a), upper_probability(sys.credal, a));
    }
  }
}

}  // namespace
}  // namespace isex
