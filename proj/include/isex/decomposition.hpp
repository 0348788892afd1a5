#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "isex/credal_set.hpp"
#include "isex/system.hpp"

namespace isex {

/// Desk-scale limits for exhaustive component computations.
struct Limits {
  std::size_t max_states = 12;
  std::size_t max_generators = 12;
  std::uint64_t max_d = 64;
};

/// A map together with a canonical credal set that is invariant under it.
/// Construction canonicalises the set and throws kNotInvariant (message
/// names a witness observable) when E[f o T] = E[f] fails for some f.
class InvariantSystem {
 public:
  InvariantSystem(SystemMap map, const CredalSet& credal);

  const SystemMap& map() const noexcept { return map_; }
  const CredalSet& credal() const noexcept { return credal_; }
  /// Pushforward action on the extreme points.
  const Permutation& permutation() const noexcept { return permutation_; }

 private:
  struct Trusted {};
  InvariantSystem(SystemMap map, CredalSet credal, Trusted);
  friend class ComponentTable;

  SystemMap map_;
  CredalSet credal_;
  Permutation permutation_;
};

/// Memoised periodic components Theta^(d) of one invariant system. Lookups
/// are guarded by a mutex, so one table may be shared between threads.
class ComponentTable {
 public:
  explicit ComponentTable(InvariantSystem system, Limits limits = {});

  const InvariantSystem& system() const noexcept { return system_; }
  const SystemMap& map() const noexcept { return system_.map(); }
  const CredalSet& credal() const noexcept { return system_.credal(); }
  const Limits& limits() const noexcept { return limits_; }

  /// Theta^(d): extreme points of {P in conv(C) : P o T^-d = P}.
  const CredalSet& theta(std::uint64_t d) const;
  /// Theta^(d) with its own pushforward permutation under T.
  const InvariantSystem& component(std::uint64_t d) const;

 private:
  void check_d(std::uint64_t d) const;

  InvariantSystem system_;
  Limits limits_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint64_t, std::unique_ptr<CredalSet>> thetas_;
  mutable std::map<std::uint64_t, std::unique_ptr<InvariantSystem>> components_;
};

/// Extreme points of {P in conv(C) : P o step^-1 = P}, enumerated as the
/// vertices of the coefficient polytope {lambda in simplex : sum lambda_i (P_i o step^-1 - P_i) = 0}
/// mapped into probability space.
CredalSet invariant_part(const CredalSet& credal, const SystemMap& step);

CredalSet theta_d(const CredalSet& credal, const SystemMap& map, std::uint64_t d);

/// E^(d)[f] as the support function of Theta^(d).
Rational e_d_lp(const ComponentTable& table, std::uint64_t d, const Observable& f);
Rational e_d_lp(const CredalSet& credal, const SystemMap& map, std::uint64_t d, const Observable& f);

/// E^(d)[f] = E[h] / c with h = sum_{k=l}^{l+c-1} f o T^{kd}, where (l, c) are
/// the transient length and period of k -> T^{kd}.
Rational e_d_closed_form(const ComponentTable& table, std::uint64_t d, const Observable& f);
Rational e_d_closed_form(const CredalSet& credal, const SystemMap& map, std::uint64_t d, const Observable& f);

/// a_n / n with a_n = E[sum_{k<n} f o T^{kd}]; never below the limit.
Rational cesaro_upper(const ComponentTable& table, std::uint64_t d, const Observable& f, std::uint64_t n);
Rational cesaro_upper(const CredalSet& credal, const SystemMap& map, std::uint64_t d, const Observable& f,
                      std::uint64_t n);

struct ShiftIdentityCheck {
  Rational shifted;  // E^(d)[f + g o T^d - g]
  Rational plain;    // E^(d)[f]
  bool holds = false;
};

ShiftIdentityCheck check_shift_identity(const ComponentTable& table, std::uint64_t d, const Observable& f,
                                        const Observable& g);

struct InclusionCheck {
  bool holds = false;
  /// First generator of the smaller component outside the larger one.
  std::optional<std::size_t> offending_generator;
};

/// Theta^(d) within Theta^(l) for d | l; throws kNotDivisible otherwise.
InclusionCheck check_monotone_inclusion(const ComponentTable& table, std::uint64_t d, std::uint64_t l);

struct GcdReductionCheck {
  bool precondition_met = false;  // Theta^(l) within Theta^(d)
  std::uint64_t gcd = 1;
  bool holds = false;             // Theta^(l) == Theta^(gcd); vacuous when the precondition fails
};

GcdReductionCheck check_gcd_reduction(const ComponentTable& table, std::uint64_t l, std::uint64_t d);

struct IteratedDecompositionCheck {
  std::uint64_t gcd = 1;
  CredalSet nested;   // (Theta^(d))^(l)
  CredalSet reduced;  // Theta^(gcd(l, d))
  bool holds = false;
};

IteratedDecompositionCheck check_iterated_decomposition(const ComponentTable& table, std::uint64_t d,
                                                        std::uint64_t l);

}  // namespace isex
