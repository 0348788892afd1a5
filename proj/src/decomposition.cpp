#include "isex/decomposition.hpp"

#include <numeric>
#include <string>

#include "isex/error.hpp"
#include "isex/polytope.hpp"

namespace isex {

namespace {

CredalSet canonical_or_throw(const CredalSet& credal) {
  return credal.canonical() ? credal : extreme_points(credal.generators());
}

Permutation checked_permutation(const SystemMap& map, const CredalSet& credal) {
  if (credal.dimension() != map.size()) throw Error(ErrorKind::kDimensionMismatch, "credal set and map sizes differ");
  const InvarianceVerdict verdict = check_invariance(credal, map);
  if (!verdict.invariant) {
    std::string f;
    for (std::size_t x = 0; x < verdict.witness->size(); ++x) f += (x ? "," : "") + to_string((*verdict.witness)[x]);
    throw Error(ErrorKind::kNotInvariant, "E is not T-invariant: for f = (" + f + "), E[f] = " +
                                              to_string(verdict.upper_of_witness) + " but E[f o T] = " +
                                              to_string(verdict.upper_of_shifted_witness));
  }
  return pushforward_permutation(credal, map);
}

}  // namespace

InvariantSystem::InvariantSystem(SystemMap map, const CredalSet& credal)
    : map_(std::move(map)), credal_(canonical_or_throw(credal)), permutation_(checked_permutation(map_, credal_)) {}

InvariantSystem::InvariantSystem(SystemMap map, CredalSet credal, Trusted)
    : map_(std::move(map)), credal_(std::move(credal)), permutation_(std::vector<std::size_t>{}) {
  std::vector<std::size_t> mapping(credal_.size());
  for (std::size_t i = 0; i < credal_.size(); ++i) {
    const auto j = credal_.index_of(pushforward(credal_[i], map_));
    if (!j) throw Error(ErrorKind::kNotVertexImage, "component is not invariant under the map (internal)");
    mapping[i] = *j;
  }
  permutation_ = Permutation(std::move(mapping));
}

ComponentTable::ComponentTable(InvariantSystem system, Limits limits)
    : system_(std::move(system)), limits_(limits) {
  if (system_.map().size() > limits_.max_states) {
    throw Error(ErrorKind::kCapExceeded, "component computations need n <= " + std::to_string(limits_.max_states));
  }
  if (system_.credal().size() > limits_.max_generators) {
    throw Error(ErrorKind::kCapExceeded,
                "component computations need at most " + std::to_string(limits_.max_generators) + " extreme points");
  }
}

void ComponentTable::check_d(std::uint64_t d) const {
  if (d == 0) throw Error(ErrorKind::kInvalidArgument, "component index d must be >= 1");
  if (d > limits_.max_d) throw Error(ErrorKind::kCapExceeded, "component index d exceeds " + std::to_string(limits_.max_d));
}

const CredalSet& ComponentTable::theta(std::uint64_t d) const {
  check_d(d);
  {
    std::lock_guard lock(mutex_);
    if (auto it = thetas_.find(d); it != thetas_.end()) return *it->second;
  }
  auto computed = std::make_unique<CredalSet>(invariant_part(credal(), compose_power(map(), d)));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = thetas_.emplace(d, std::move(computed));
  return *it->second;
}

const InvariantSystem& ComponentTable::component(std::uint64_t d) const {
  const CredalSet& set = theta(d);
  {
    std::lock_guard lock(mutex_);
    if (auto it = components_.find(d); it != components_.end()) return *it->second;
  }
  auto computed = std::unique_ptr<InvariantSystem>(new InvariantSystem(map(), set, InvariantSystem::Trusted{}));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = components_.emplace(d, std::move(computed));
  return *it->second;
}

CredalSet invariant_part(const CredalSet& credal, const SystemMap& step) {
  const std::size_t n = credal.dimension();
  const std::size_t m = credal.size();
  if (step.size() != n) throw Error(ErrorKind::kDimensionMismatch, "credal set and map sizes differ");

  std::vector<ProbVec> images;
  images.reserve(m);
  for (const auto& g : credal.generators()) images.push_back(pushforward(g, step));

  VertexEnumerator enumerator(m);
  for (State x = 0; x < n && !enumerator.empty(); ++x) {
    RationalVector row(m);
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
      row[i] = images[i][x] - credal[i][x];
      nonzero = nonzero || row[i] != 0;
    }
    if (nonzero) enumerator.add_equality(row, Rational(0));
  }
  if (enumerator.empty()) {
    throw Error(ErrorKind::kNotInvariant, "no invariant probability in the credal set; is E T-invariant?");
  }
  std::vector<ProbVec> points;
  points.reserve(enumerator.vertices().size());
  for (const auto& lambda : enumerator.vertices()) points.push_back(mix(credal.generators(), lambda));
  return extreme_points(std::move(points));
}

CredalSet theta_d(const CredalSet& credal, const SystemMap& map, std::uint64_t d) {
  return ComponentTable(InvariantSystem(map, credal)).theta(d);
}

Rational e_d_lp(const ComponentTable& table, std::uint64_t d, const Observable& f) {
  return upper_expectation(table.theta(d), f);
}

Rational e_d_lp(const CredalSet& credal, const SystemMap& map, std::uint64_t d, const Observable& f) {
  return e_d_lp(ComponentTable(InvariantSystem(map, credal)), d, f);
}

Rational e_d_closed_form(const ComponentTable& table, std::uint64_t d, const Observable& f) {
  if (d == 0) throw Error(ErrorKind::kInvalidArgument, "component index d must be >= 1");
  const SystemMap step = compose_power(table.map(), d);
  const OrbitStructure orbit = orbit_structure(step);
  Observable term = compose(f, compose_power(step, orbit.transient_length));
  Observable h = constant_observable(f.size(), Rational(0));
  for (std::uint64_t k = 0; k < orbit.period; ++k) {
    h = h + term;
    term = compose(term, step);
  }
  return upper_expectation(table.credal(), h) / Rational(static_cast<unsigned long>(orbit.period));
}

Rational e_d_closed_form(const CredalSet& credal, const SystemMap& map, std::uint64_t d, const Observable& f) {
  return e_d_closed_form(ComponentTable(InvariantSystem(map, credal)), d, f);
}

Rational cesaro_upper(const ComponentTable& table, std::uint64_t d, const Observable& f, std::uint64_t n) {
  if (d == 0) throw Error(ErrorKind::kInvalidArgument, "component index d must be >= 1");
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "Cesaro average needs n >= 1");
  const SystemMap step = compose_power(table.map(), d);
  Observable term = f;
  Observable sum = constant_observable(f.size(), Rational(0));
  for (std::uint64_t k = 0; k < n; ++k) {
    sum = sum + term;
    term = compose(term, step);
  }
  return upper_expectation(table.credal(), sum) / Rational(static_cast<unsigned long>(n));
}

Rational cesaro_upper(const CredalSet& credal, const SystemMap& map, std::uint64_t d, const Observable& f,
                      std::uint64_t n) {
  return cesaro_upper(ComponentTable(InvariantSystem(map, credal)), d, f, n);
}

ShiftIdentityCheck check_shift_identity(const ComponentTable& table, std::uint64_t d, const Observable& f,
                                        const Observable& g) {
  const Observable cocycle = f + compose(g, compose_power(table.map(), d)) - g;
  ShiftIdentityCheck out;
  out.shifted = e_d_lp(table, d, cocycle);
  out.plain = e_d_lp(table, d, f);
  out.holds = out.shifted == out.plain;
  return out;
}

InclusionCheck check_monotone_inclusion(const ComponentTable& table, std::uint64_t d, std::uint64_t l) {
  if (d == 0 || l % d != 0) {
    throw Error(ErrorKind::kNotDivisible, std::to_string(d) + " does not divide " + std::to_string(l));
  }
  const CredalSet& small = table.theta(d);
  const CredalSet& large = table.theta(l);
  InclusionCheck out;
  out.holds = true;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (!membership(small[i], large)) {
      out.holds = false;
      out.offending_generator = i;
      break;
    }
  }
  return out;
}

GcdReductionCheck check_gcd_reduction(const ComponentTable& table, std::uint64_t l, std::uint64_t d) {
  GcdReductionCheck out;
  out.gcd = std::gcd(l, d);
  out.precondition_met = is_subset(table.theta(l), table.theta(d));
  out.holds = !out.precondition_met || table.theta(l) == table.theta(out.gcd);
  return out;
}

IteratedDecompositionCheck check_iterated_decomposition(const ComponentTable& table, std::uint64_t d,
                                                        std::uint64_t l) {
  const ComponentTable inner(table.component(d), table.limits());
  const std::uint64_t g = std::gcd(l, d);
  IteratedDecompositionCheck out{g, inner.theta(l), table.theta(g), false};
  out.holds = out.nested == out.reduced;
  return out;
}

}  // namespace isex
