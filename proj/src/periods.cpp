#include "isex/periods.hpp"

#include <algorithm>
#include <numeric>

#include "isex/error.hpp"
#include "isex/random.hpp"

namespace isex {

std::uint64_t period_of(const InvariantSystem& system) { return system.permutation().order(); }

std::uint64_t period_of(const CredalSet& credal, const SystemMap& map) {
  return period_of(InvariantSystem(map, credal));
}

std::uint64_t period_of_component(const ComponentTable& table, std::uint64_t d) {
  return period_of(table.component(d));
}

std::uint64_t period_of_component(const CredalSet& credal, const SystemMap& map, std::uint64_t d) {
  return period_of_component(ComponentTable(InvariantSystem(map, credal)), d);
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    if (k != n / k) out.push_back(n / k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PeriodCharacterizationCheck check_period_characterization(const ComponentTable& table, std::uint64_t d,
                                                          std::size_t samples, std::uint64_t seed) {
  PeriodCharacterizationCheck out;
  out.d = d;
  out.shift_invariant = table.system().permutation().power(d).is_identity();
  out.equals_component = table.theta(d) == table.credal();
  out.period_divides = d % period_of(table.system()) == 0;
  out.samples = samples;
  if (out.shift_invariant && out.equals_component) {
    const SystemMap step = compose_power(table.map(), d);
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const Observable f = random_observable(table.map().size(), rng);
      if (upper_expectation(table.credal(), compose(f, step) - f) != 0 ||
          upper_expectation(table.credal(), f) != e_d_lp(table, d, f)) {
        out.spot_checks_hold = false;
      }
    }
  }
  out.holds = out.shift_invariant == out.equals_component && (!out.shift_invariant || out.period_divides) &&
              out.spot_checks_hold;
  return out;
}

PeriodLatticeCheck check_period_lattice(const ComponentTable& table, std::uint64_t d, std::optional<std::uint64_t> l) {
  if (l && (*l == 0 || *l % d != 0)) {
    throw Error(ErrorKind::kNotDivisible, std::to_string(d) + " does not divide " + std::to_string(*l));
  }
  PeriodLatticeCheck out;
  out.d = d;
  out.p_d = period_of_component(table, d);
  out.p_d_divides_d = d % out.p_d == 0;
  const CredalSet& target = table.theta(d);
  out.first_equal_component = d;
  for (std::uint64_t k = 1; k <= d; ++k) {
    if (table.theta(k) == target) {
      out.first_equal_component = k;
      break;
    }
  }
  out.minimal = out.first_equal_component == out.p_d;
  out.holds = out.p_d_divides_d && out.minimal;
  if (l) {
    out.l = l;
    out.p_l = period_of_component(table, *l);
    out.p_d_divides_p_l = *out.p_l % out.p_d == 0;
    out.holds = out.holds && *out.p_d_divides_p_l;
  }
  return out;
}

PeriodicDecompositionCheck periodic_decomposition_check(const ComponentTable& table, const Observable& f) {
  PeriodicDecompositionCheck out;
  out.period = period_of(table.system());
  out.upper = upper_expectation(table.credal(), f);
  out.component_upper = e_d_lp(table, out.period, f);
  out.supremum = e_d_lp(table, 1, f);
  out.attained_at = 1;
  for (std::uint64_t d = 2; d <= out.period; ++d) {
    Rational v = e_d_lp(table, d, f);
    if (v > out.supremum) {
      out.supremum = std::move(v);
      out.attained_at = d;
    }
  }
  out.holds = out.upper == out.component_upper && out.upper == out.supremum;
  return out;
}

DominatingComponent dominating_component(const ComponentTable& table, std::uint64_t l_max) {
  DominatingComponent out;
  out.d = period_of(table.system());
  out.l_max = l_max;
  const CredalSet& top = table.theta(out.d);
  for (std::uint64_t l = 1; l <= l_max; ++l) {
    if (!is_subset(table.theta(l), top)) out.failing_l.push_back(l);
  }
  out.inclusions_hold = out.failing_l.empty();
  for (std::uint64_t a = 1; a <= l_max; ++a) {
    for (std::uint64_t b = 2 * a; b <= l_max; b += a) {
      if (table.theta(a).size() > table.theta(b).size()) out.cardinality_violations.emplace_back(a, b);
    }
  }
  out.cardinality_monotone = out.cardinality_violations.empty();
  return out;
}

PeriodReport period_report(const ComponentTable& table, std::uint64_t d_max) {
  PeriodReport out;
  out.period = period_of(table.system());
  for (std::uint64_t d = 1; d <= d_max; ++d) {
    out.components.push_back({d, period_of_component(table, d), table.theta(d).size()});
  }
  for (const auto& a : out.components) {
    const bool divides = a.d % a.p_d == 0;
    out.lattice_holds = out.lattice_holds && divides;
    out.lattice_facts.push_back("p_" + std::to_string(a.d) + " = " + std::to_string(a.p_d) + (divides ? " divides " : " does NOT divide ") +
                                std::to_string(a.d));
    const bool divides_period = out.period % a.p_d == 0;
    out.lattice_holds = out.lattice_holds && divides_period;
    out.lattice_facts.push_back("p_" + std::to_string(a.d) + " = " + std::to_string(a.p_d) +
                                (divides_period ? " divides " : " does NOT divide ") + "p_E = " +
                                std::to_string(out.period));
    for (const auto& b : out.components) {
      if (b.d <= a.d || b.d % a.d != 0) continue;
      const bool ok = b.p_d % a.p_d == 0;
      out.lattice_holds = out.lattice_holds && ok;
      out.lattice_facts.push_back("p_" + std::to_string(a.d) + " = " + std::to_string(a.p_d) +
                                  (ok ? " divides " : " does NOT divide ") + "p_" + std::to_string(b.d) + " = " +
                                  std::to_string(b.p_d));
    }
  }
  out.dominating_d = out.period;
  return out;
}

}  // namespace isex
