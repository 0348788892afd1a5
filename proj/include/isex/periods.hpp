#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isex/decomposition.hpp"

namespace isex {

/// p_E: order of the pushforward permutation on extreme points. pi^d = id iff
/// every extreme point is T^d-invariant iff Theta = Theta^(d).
std::uint64_t period_of(const InvariantSystem& system);
std::uint64_t period_of(const CredalSet& credal, const SystemMap& map);

/// p_d = period of the component Theta^(d).
std::uint64_t period_of_component(const ComponentTable& table, std::uint64_t d);
std::uint64_t period_of_component(const CredalSet& credal, const SystemMap& map, std::uint64_t d);

std::vector<std::uint64_t> divisors(std::uint64_t n);

struct PeriodCharacterizationCheck {
  std::uint64_t d = 1;
  bool shift_invariant = false;   // E[f o T^d - f] = 0 for all f (pi^d = id)
  bool equals_component = false;  // E = E^(d) (Theta == Theta^(d))
  bool period_divides = false;    // p_E | d; only required when both sides hold
  std::size_t samples = 0;
  bool spot_checks_hold = true;
  bool holds = false;
};

/// Both sides of "E[f o T^d - f] = 0 for all f iff E = E^(d)" decided
/// exactly, plus sampled-observable spot checks when they hold.
PeriodCharacterizationCheck check_period_characterization(const ComponentTable& table, std::uint64_t d,
                                                          std::size_t samples, std::uint64_t seed);

struct PeriodLatticeCheck {
  std::uint64_t d = 1;
  std::uint64_t p_d = 1;
  bool p_d_divides_d = false;
  std::uint64_t first_equal_component = 1;  // min{l : Theta^(l) == Theta^(d)}
  bool minimal = false;
  std::optional<std::uint64_t> l;
  std::optional<std::uint64_t> p_l;
  std::optional<bool> p_d_divides_p_l;
  bool holds = false;
};

/// p_d | d, p_d = min{l <= d : Theta^(l) = Theta^(d)}, and p_d | p_l when an
/// l with d | l is given (throws kNotDivisible otherwise).
PeriodLatticeCheck check_period_lattice(const ComponentTable& table, std::uint64_t d,
                                        std::optional<std::uint64_t> l = std::nullopt);

struct PeriodicDecompositionCheck {
  std::uint64_t period = 1;
  Rational upper;            // E[f]
  Rational component_upper;  // E^(p_E)[f]
  Rational supremum;         // max over d <= p_E of E^(d)[f]
  std::uint64_t attained_at = 1;
  bool holds = false;
};

/// E[f] = sup_d E^(d)[f], reduced to d <= p_E since E^(d) = E^(gcd(d, p_E)).
PeriodicDecompositionCheck periodic_decomposition_check(const ComponentTable& table, const Observable& f);

struct DominatingComponent {
  std::uint64_t d = 1;
  std::uint64_t l_max = 1;
  bool inclusions_hold = false;  // Theta^(l) within Theta^(d) for l <= l_max
  std::vector<std::uint64_t> failing_l;
  /// card(ext Theta^(a)) <= card(ext Theta^(b)) for a | b <= l_max. Follows
  /// from mutual singularity under strong ergodicity; reported, not assumed.
  bool cardinality_monotone = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cardinality_violations;
};

DominatingComponent dominating_component(const ComponentTable& table, std::uint64_t l_max);

struct ComponentPeriod {
  std::uint64_t d = 1;
  std::uint64_t p_d = 1;
  std::size_t vertex_count = 0;
};

struct PeriodReport {
  std::uint64_t period = 1;
  std::vector<ComponentPeriod> components;
  std::vector<std::string> lattice_facts;
  bool lattice_holds = true;
  std::uint64_t dominating_d = 1;
};

/// Components d = 1..d_max with their periods and the divisibility facts among them.
PeriodReport period_report(const ComponentTable& table, std::uint64_t d_max);

}  // namespace isex
