#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "isex/rational.hpp"
#include "isex/system.hpp"

namespace isex {

/// Exact probability vector: nonnegative weights summing to one.
class ProbVec {
 public:
  /// Throws kNotAProbability on a negative weight or a sum other than 1.
  explicit ProbVec(RationalVector weights);

  static ProbVec point_mass(std::size_t n, State x);
  static ProbVec uniform(std::size_t n);
  /// Uniform on `support` (nonempty, no repeats).
  static ProbVec uniform_on(std::size_t n, std::span<const State> support);

  std::size_t size() const noexcept { return weights_.size(); }
  const Rational& operator[](State x) const { return weights_[x]; }
  const RationalVector& weights() const noexcept { return weights_; }

  Rational expectation(const Observable& f) const;
  Rational probability(std::span<const State> set) const;
  std::vector<State> support() const;

  bool operator==(const ProbVec&) const = default;
  /// Lexicographic order on the weights.
  bool operator<(const ProbVec& other) const;

 private:
  ProbVec(RationalVector weights, bool /*trusted*/) : weights_(std::move(weights)) {}
  friend ProbVec mix(std::span<const ProbVec>, std::span<const Rational>);
  friend ProbVec pushforward(const ProbVec&, const SystemMap&);

  RationalVector weights_;
};

/// Sum_i coefficients[i] * points[i]; coefficients must be a probability vector.
ProbVec mix(std::span<const ProbVec> points, std::span<const Rational> coefficients);

/// (P o T^-1)(y) = sum over x with T x = y of P(x).
ProbVec pushforward(const ProbVec& p, const SystemMap& map);

/// Convex hull of finitely many probability vectors. In canonical form the
/// generators are exactly the extreme points, deduplicated and sorted, so two
/// canonical sets describe the same polytope iff they compare equal.
class CredalSet {
 public:
  /// Throws kEmptyInput or kDimensionMismatch; does not canonicalise.
  explicit CredalSet(std::vector<ProbVec> generators);

  std::size_t dimension() const noexcept { return generators_.front().size(); }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<ProbVec>& generators() const noexcept { return generators_; }
  const ProbVec& operator[](std::size_t i) const { return generators_[i]; }
  bool canonical() const noexcept { return canonical_; }

  std::optional<std::size_t> index_of(const ProbVec& p) const;

  bool operator==(const CredalSet& other) const { return generators_ == other.generators_; }

 private:
  CredalSet(std::vector<ProbVec> generators, bool canonical)
      : generators_(std::move(generators)), canonical_(canonical) {}
  friend CredalSet extreme_points(std::vector<ProbVec>);
  friend CredalSet canonical_from_vertices(std::vector<ProbVec>);

  std::vector<ProbVec> generators_;
  bool canonical_ = false;
};

/// Canonical form of conv(generators): drops every generator lying in the
/// hull of the remaining ones (exact LP), then sorts.
CredalSet extreme_points(std::vector<ProbVec> generators);

/// Canonical form for points already known to be extreme (e.g. from vertex
/// enumeration); only deduplicates and sorts.
CredalSet canonical_from_vertices(std::vector<ProbVec> vertices);

/// Convex weights expressing p over the generators, if any.
std::optional<RationalVector> convex_weights(const ProbVec& p, std::span<const ProbVec> generators);
bool membership(const ProbVec& p, const CredalSet& set);
/// Every generator of `inner` is a member of `outer`.
bool is_subset(const CredalSet& inner, const CredalSet& outer);

/// E[f] = max over the hull of E_P[f], attained at a generator.
Rational upper_expectation(const CredalSet& set, const Observable& f);
/// Index of a generator attaining upper_expectation (smallest index on ties).
std::size_t upper_expectation_argmax(const CredalSet& set, const Observable& f);
/// V(A) = E[1_A].
Rational upper_probability(const CredalSet& set, std::span<const State> event);

struct InvarianceVerdict {
  bool invariant = false;
  /// On failure: f with E[f o T] != E[f].
  std::optional<Observable> witness;
  Rational upper_of_witness;         // E[f]
  Rational upper_of_shifted_witness; // E[f o T]
};

/// Decides E[f o T] = E[f] for all f via conv(pushforwards) = conv(generators).
InvarianceVerdict check_invariance(const CredalSet& set, const SystemMap& map);

/// Bijection on {0, ..., m-1}.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> mapping);

  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator()(std::size_t i) const { return mapping_[i]; }
  const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }
  /// Minimal k >= 1 with pi^k = id.
  std::uint64_t order() const;
  std::vector<std::vector<std::size_t>> cycles() const;
  bool is_identity() const;
  Permutation power(std::uint64_t k) const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> mapping_;
};

/// pi(i) = index of pushforward(generator i). Requires a canonical, invariant
/// set; throws kNotInvariant otherwise and kNotVertexImage if a vertex image
/// is not a vertex.
Permutation pushforward_permutation(const CredalSet& set, const SystemMap& map);

/// T-invariant member of the set agreeing with p on every T-invariant event:
/// the exact Cesaro average (1/c) sum_{k=l}^{l+c-1} p o T^-k.
ProbVec invariant_surrogate(const CredalSet& set, const SystemMap& map, const ProbVec& p);

inline constexpr std::size_t kDefaultCoreStateCap = 10;

/// Canonical vertices of {P : P(A) <= V(A) for every event A}.
CredalSet core_of_capacity(const CredalSet& set, std::size_t state_cap = kDefaultCoreStateCap);

/// T-invariant members of the capacity core, enumerated directly from the
/// core's constraints plus P o T^-1 = P.
CredalSet invariant_core(const CredalSet& set, const SystemMap& map, std::size_t state_cap = kDefaultCoreStateCap);

}  // namespace isex
