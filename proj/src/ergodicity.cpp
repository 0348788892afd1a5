#include "isex/ergodicity.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "isex/error.hpp"
#include "isex/periods.hpp"

namespace isex {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

namespace {

std::optional<std::size_t> carrier(const ProbVec& p, const InvariantPartition& partition) {
  for (std::size_t a = 0; a < partition.atoms.size(); ++a) {
    const Rational mass = p.probability(partition.atoms[a]);
    if (mass == 1) return a;
    if (mass != 0) return std::nullopt;
  }
  return std::nullopt;
}

void check_atom_cap(const InvariantPartition& partition, std::size_t atom_cap) {
  if (partition.atoms.size() > atom_cap || partition.atoms.size() >= 63) {
    throw Error(ErrorKind::kAtomCapExceeded, "invariant partition has " + std::to_string(partition.atoms.size()) +
                                                 " atoms; the cap is " + std::to_string(atom_cap));
  }
}

// Masses of each generator on each atom; unions are then sums over atoms.
std::vector<RationalVector> atom_masses(const CredalSet& credal, const InvariantPartition& partition) {
  std::vector<RationalVector> masses;
  for (const auto& g : credal.generators()) {
    RationalVector row;
    for (const auto& atom : partition.atoms) row.push_back(g.probability(atom));
    masses.push_back(std::move(row));
  }
  return masses;
}

struct UnionFailure {
  std::vector<State> event;
  Rational value;
};

std::optional<UnionFailure> first_nontrivial_union(const CredalSet& credal, const InvariantPartition& partition,
                                                   std::size_t atom_cap) {
  check_atom_cap(partition, atom_cap);
  const auto masses = atom_masses(credal, partition);
  const std::size_t atoms = partition.atoms.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << atoms); ++mask) {
    Rational best = 0;
    for (const auto& row : masses) {
      Rational total = 0;
      for (std::size_t a = 0; a < atoms; ++a) {
        if (mask >> a & 1U) total += row[a];
      }
      if (total > best) best = total;
    }
    if (best != 0 && best != 1) {
      std::vector<State> event;
      for (std::size_t a = 0; a < atoms; ++a) {
        if (mask >> a & 1U) event.insert(event.end(), partition.atoms[a].begin(), partition.atoms[a].end());
      }
      std::sort(event.begin(), event.end());
      return UnionFailure{std::move(event), best};
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_ergodic(const ProbVec& p, const SystemMap& map, std::uint64_t d) {
  if (p.size() != map.size()) throw Error(ErrorKind::kDimensionMismatch, "probability and map sizes differ");
  if (pushforward(p, compose_power(map, d)) != p) {
    throw Error(ErrorKind::kNotInvariantProbability, "probability is not T^" + std::to_string(d) + "-invariant");
  }
  const InvariantPartition partition = invariant_partition(map, d);
  for (const auto& atom : partition.atoms) {
    const Rational mass = p.probability(atom);
    if (mass != 0 && mass != 1) return false;
  }
  return true;
}

ErgodicReport ergodic_decomposition(const ComponentTable& table, std::uint64_t d) {
  ErgodicReport out;
  out.d = d;
  out.p_d = period_of_component(table, d);
  const InvariantPartition partition = invariant_partition(table.map(), out.p_d);
  out.all_ergodic = true;
  for (const auto& p : table.theta(d).generators()) {
    ExtremePointRecord record{p, is_ergodic(p, table.map(), out.p_d), std::nullopt};
    if (record.ergodic) record.carrier_atom = carrier(p, partition);
    out.all_ergodic = out.all_ergodic && record.ergodic;
    out.extreme_points.push_back(std::move(record));
  }
  if (out.all_ergodic) {
    std::set<std::size_t> atoms;
    for (const auto& r : out.extreme_points) atoms.insert(*r.carrier_atom);
    out.mutually_singular = atoms.size() == out.extreme_points.size();
  }
  return out;
}

StrongErgodicityVerdict strong_ergodicity_check(const ComponentTable& table, std::size_t atom_cap) {
  StrongErgodicityVerdict out;
  out.strongly_ergodic = true;
  for (std::uint64_t d : divisors(period_of(table.system()))) {
    StrongErgodicityComponent component;
    component.d = d;
    component.p_d = period_of_component(table, d);
    const InvariantPartition partition = invariant_partition(table.map(), component.p_d);
    component.atom_count = partition.atoms.size();
    auto failure = first_nontrivial_union(table.theta(d), partition, atom_cap);
    component.holds = !failure;
    if (failure) {
      component.counterexample = std::move(failure->event);
      component.counterexample_value = std::move(failure->value);
    }
    out.strongly_ergodic = out.strongly_ergodic && component.holds;
    out.components.push_back(std::move(component));
  }
  return out;
}

std::optional<std::vector<State>> capacity_ergodicity_counterexample(const CredalSet& credal, const SystemMap& map,
                                                                     std::uint64_t d, std::size_t atom_cap) {
  auto failure = first_nontrivial_union(credal, invariant_partition(map, d), atom_cap);
  if (!failure) return std::nullopt;
  return std::move(failure->event);
}

InvariantCoreCheck theta_hat_invariant_equality(const ComponentTable& table, std::size_t state_cap) {
  if (table.map().size() > state_cap) {
    throw Error(ErrorKind::kStateCapExceeded,
                "capacity core needs n <= " + std::to_string(state_cap) + " (got " + std::to_string(table.map().size()) + ")");
  }
  InvariantCoreCheck out{Verdict::kNotApplicable, std::nullopt, table.theta(1), std::nullopt};
  out.hypothesis_counterexample = capacity_ergodicity_counterexample(table.credal(), table.map(), 1);
  if (out.hypothesis_counterexample) return out;
  out.core_invariant = invariant_core(table.credal(), table.map(), state_cap);
  out.verdict = *out.core_invariant == out.invariant_part ? Verdict::kHolds : Verdict::kFails;
  return out;
}

Rational cycle_time_mean(const SystemMap& map, std::uint64_t p, const Observable& f, State x0) {
  if (x0 >= map.size()) throw Error(ErrorKind::kInvalidState, "state " + std::to_string(x0) + " out of range");
  if (f.size() != map.size()) throw Error(ErrorKind::kDimensionMismatch, "observable length differs from state count");
  const OrbitStructure orbit = orbit_structure(compose_power(map, p));
  const auto& cycle = orbit.cycles[orbit.cycle_of[x0]];
  Rational total = 0;
  for (State y : cycle) total += f[y];
  return total / Rational(static_cast<unsigned long>(cycle.size()));
}

ErgodicTheoremCheck ergodic_theorem_check(const ComponentTable& table, const Observable& f, std::size_t atom_cap) {
  ErgodicTheoremCheck out;
  const CredalSet& credal = table.credal();
  out.period = period_of(table.system());
  out.upper = upper_expectation(credal, f);
  out.lower = -upper_expectation(credal, -f);
  out.hypothesis = strong_ergodicity_check(table, atom_cap).strongly_ergodic;

  out.sandwich_holds = true;
  for (std::size_t i = 0; i < credal.size(); ++i) {
    for (State x : credal[i].support()) {
      Rational mean = cycle_time_mean(table.map(), out.period, f, x);
      const bool within = out.lower <= mean && mean <= out.upper;
      out.sandwich_holds = out.sandwich_holds && within;
      out.sandwich.push_back({i, x, std::move(mean), within});
    }
  }

  for (const auto& p : table.theta(out.period).generators()) {
    if (p.expectation(f) != out.upper) continue;
    std::vector<std::pair<State, Rational>> means;
    bool all_equal = true;
    for (State x : p.support()) {
      Rational mean = cycle_time_mean(table.map(), out.period, f, x);
      all_equal = all_equal && mean == out.upper;
      means.emplace_back(x, std::move(mean));
    }
    if (all_equal) {
      out.achiever = p;
      out.achiever_means = std::move(means);
      break;
    }
  }

  if (!out.hypothesis) {
    out.verdict = Verdict::kNotApplicable;
    return out;
  }
  if (!out.achiever) {
    throw Error(ErrorKind::kNoAchiever, "strongly ergodic system without an extreme point attaining E[f] (internal)");
  }
  out.verdict = out.sandwich_holds ? Verdict::kHolds : Verdict::kFails;
  return out;
}

}  // namespace isex
