#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isex/decomposition.hpp"

namespace isex {

/// Outcome of a check whose hypotheses an instance may violate.
enum class Verdict { kHolds, kFails, kNotApplicable };

std::string_view to_string(Verdict verdict);

/// P(atom) in {0, 1} for every atom of the T^d-invariant partition. Throws
/// kNotInvariantProbability unless P o T^-d = P.
bool is_ergodic(const ProbVec& p, const SystemMap& map, std::uint64_t d);

struct ExtremePointRecord {
  ProbVec point;
  bool ergodic = false;
  /// Atom of I_{p_d} carrying all the mass, when ergodic.
  std::optional<std::size_t> carrier_atom;
};

struct ErgodicReport {
  std::uint64_t d = 1;
  std::uint64_t p_d = 1;
  std::vector<ExtremePointRecord> extreme_points;
  bool all_ergodic = false;
  /// Distinct carrier atoms for distinct extreme points; set only when all are ergodic.
  std::optional<bool> mutually_singular;
};

/// ext Theta^(d) with per-point T^{p_d}-ergodicity.
ErgodicReport ergodic_decomposition(const ComponentTable& table, std::uint64_t d);

struct StrongErgodicityComponent {
  std::uint64_t d = 1;
  std::uint64_t p_d = 1;
  std::size_t atom_count = 0;
  bool holds = false;
  /// First union of atoms A (in mask order) with V^(d)(A) not in {0, 1}.
  std::optional<std::vector<State>> counterexample;
  std::optional<Rational> counterexample_value;
};

struct StrongErgodicityVerdict {
  bool strongly_ergodic = false;
  std::vector<StrongErgodicityComponent> components;  // one per divisor of p_E
};

inline constexpr std::size_t kDefaultAtomCap = 20;

/// For every d | p_E: V^(d)(A) in {0, 1} for each union A of atoms of I_{p_d}.
StrongErgodicityVerdict strong_ergodicity_check(const ComponentTable& table, std::size_t atom_cap = kDefaultAtomCap);

/// V(A) in {0, 1} for every union of atoms of I_d; returns the first failing union.
std::optional<std::vector<State>> capacity_ergodicity_counterexample(const CredalSet& credal, const SystemMap& map,
                                                                     std::uint64_t d,
                                                                     std::size_t atom_cap = kDefaultAtomCap);

struct InvariantCoreCheck {
  Verdict verdict = Verdict::kNotApplicable;
  /// Union of I_1 atoms showing V is not T-ergodic (hypothesis failure).
  std::optional<std::vector<State>> hypothesis_counterexample;
  CredalSet invariant_part;                 // Theta(T)
  std::optional<CredalSet> core_invariant;  // invariant part of the capacity core
};

/// When V is T-ergodic, the invariant members of the credal set and of the
/// capacity core coincide.
InvariantCoreCheck theta_hat_invariant_equality(const ComponentTable& table,
                                                std::size_t state_cap = kDefaultCoreStateCap);

/// lim (1/n) sum_{k<n} f(T^{kp} x0): the average of f over the T^p-cycle reached from x0.
Rational cycle_time_mean(const SystemMap& map, std::uint64_t p, const Observable& f, State x0);

struct SandwichRecord {
  std::size_t generator = 0;
  State state = 0;
  Rational mean;
  bool within = false;
};

struct ErgodicTheoremCheck {
  std::uint64_t period = 1;
  Rational upper;  // E[f]
  Rational lower;  // -E[-f]
  /// Strong ergodicity of E; the statement is only claimed when it holds.
  bool hypothesis = false;
  std::vector<SandwichRecord> sandwich;
  bool sandwich_holds = false;
  std::optional<ProbVec> achiever;
  std::vector<std::pair<State, Rational>> achiever_means;
  Verdict verdict = Verdict::kNotApplicable;
};

/// p_E-step time means: sandwiched by -E[-f] and E[f] on every generator's
/// support, and equal to E[f] on the support of some extreme point P_f.
/// Throws kNoAchiever if strong ergodicity holds but no P_f exists.
ErgodicTheoremCheck ergodic_theorem_check(const ComponentTable& table, const Observable& f,
                                          std::size_t atom_cap = kDefaultAtomCap);

}  // namespace isex
