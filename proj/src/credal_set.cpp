#include "isex/credal_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "isex/error.hpp"
#include "isex/exact_lp.hpp"
#include "isex/polytope.hpp"

namespace isex {

ProbVec::ProbVec(RationalVector weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorKind::kNotAProbability, "probability vector is empty");
  Rational total = 0;
  for (std::size_t x = 0; x < weights_.size(); ++x) {
    if (weights_[x] < 0) {
      throw Error(ErrorKind::kNotAProbability,
                  "weight " + std::to_string(x) + " is negative (" + to_string(weights_[x]) + ")");
    }
    total += weights_[x];
  }
  if (total != 1) throw Error(ErrorKind::kNotAProbability, "weights sum to " + to_string(total) + ", not 1");
}

ProbVec ProbVec::point_mass(std::size_t n, State x) {
  if (x >= n) throw Error(ErrorKind::kInvalidState, "point mass at state " + std::to_string(x) + " out of range");
  RationalVector w(n, Rational(0));
  w[x] = 1;
  return ProbVec(std::move(w), true);
}

ProbVec ProbVec::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::kNotAProbability, "uniform on zero states");
  return ProbVec(RationalVector(n, Rational(1, static_cast<unsigned long>(n))), true);
}

ProbVec ProbVec::uniform_on(std::size_t n, std::span<const State> support) {
  if (support.empty()) throw Error(ErrorKind::kNotAProbability, "uniform on an empty support");
  RationalVector w(n, Rational(0));
  const Rational mass(1, static_cast<unsigned long>(support.size()));
  for (State x : support) {
    if (x >= n) throw Error(ErrorKind::kInvalidState, "support state " + std::to_string(x) + " out of range");
    w[x] += mass;
  }
  return ProbVec(std::move(w));
}

Rational ProbVec::expectation(const Observable& f) const {
  if (f.size() != size()) throw Error(ErrorKind::kDimensionMismatch, "observable length differs from state count");
  return dot(weights_, f.values);
}

Rational ProbVec::probability(std::span<const State> set) const {
  Rational total = 0;
  for (State x : set) {
    if (x >= size()) throw Error(ErrorKind::kInvalidState, "event state " + std::to_string(x) + " out of range");
    total += weights_[x];
  }
  return total;
}

std::vector<State> ProbVec::support() const {
  std::vector<State> out;
  for (State x = 0; x < size(); ++x) {
    if (weights_[x] != 0) out.push_back(x);
  }
  return out;
}

bool ProbVec::operator<(const ProbVec& other) const {
  return std::lexicographical_compare(weights_.begin(), weights_.end(), other.weights_.begin(), other.weights_.end());
}

ProbVec mix(std::span<const ProbVec> points, std::span<const Rational> coefficients) {
  if (points.empty() || points.size() != coefficients.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "mix: need one coefficient per point");
  }
  const std::size_t n = points.front().size();
  RationalVector w(n, Rational(0));
  Rational total = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != n) throw Error(ErrorKind::kDimensionMismatch, "mix: points of different dimension");
    if (coefficients[i] < 0) throw Error(ErrorKind::kInvalidArgument, "mix: negative coefficient");
    total += coefficients[i];
    if (coefficients[i] == 0) continue;
    for (std::size_t x = 0; x < n; ++x) w[x] += coefficients[i] * points[i][x];
  }
  if (total != 1) throw Error(ErrorKind::kInvalidArgument, "mix: coefficients sum to " + to_string(total));
  return ProbVec(std::move(w), true);
}

ProbVec pushforward(const ProbVec& p, const SystemMap& map) {
  if (p.size() != map.size()) throw Error(ErrorKind::kDimensionMismatch, "pushforward: dimension mismatch");
  RationalVector w(p.size(), Rational(0));
  for (State x = 0; x < p.size(); ++x) w[map(x)] += p[x];
  return ProbVec(std::move(w), true);
}

CredalSet::CredalSet(std::vector<ProbVec> generators) : generators_(std::move(generators)) {
  if (generators_.empty()) throw Error(ErrorKind::kEmptyInput, "a credal set needs at least one generator");
  for (const auto& g : generators_) {
    if (g.size() != generators_.front().size()) {
      throw Error(ErrorKind::kDimensionMismatch, "generators have different dimensions");
    }
  }
}

std::optional<std::size_t> CredalSet::index_of(const ProbVec& p) const {
  if (canonical_) {
    const auto it = std::lower_bound(generators_.begin(), generators_.end(), p);
    if (it != generators_.end() && *it == p) return static_cast<std::size_t>(it - generators_.begin());
    return std::nullopt;
  }
  const auto it = std::find(generators_.begin(), generators_.end(), p);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

namespace {

// Columns are the generators; rows are the n coordinates plus the sum-to-one row.
RationalMatrix hull_system(std::span<const ProbVec> generators) {
  const std::size_t n = generators.front().size();
  RationalMatrix a(n + 1, RationalVector(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t x = 0; x < n; ++x) a[x][i] = generators[i][x];
    a[n][i] = 1;
  }
  return a;
}

RationalVector hull_rhs(const ProbVec& p) {
  RationalVector b = p.weights();
  b.emplace_back(1);
  return b;
}

std::vector<ProbVec> sorted_unique(std::vector<ProbVec> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

}  // namespace

std::optional<RationalVector> convex_weights(const ProbVec& p, std::span<const ProbVec> generators) {
  if (generators.empty()) return std::nullopt;
  if (p.size() != generators.front().size()) throw Error(ErrorKind::kDimensionMismatch, "membership: dimension mismatch");
  auto result = solve_feasibility(hull_system(generators), hull_rhs(p));
  if (!result.feasible) return std::nullopt;
  return std::move(result.solution);
}

bool membership(const ProbVec& p, const CredalSet& set) {
  if (set.index_of(p)) return true;
  return convex_weights(p, set.generators()).has_value();
}

bool is_subset(const CredalSet& inner, const CredalSet& outer) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const ProbVec& p) { return membership(p, outer); });
}

CredalSet extreme_points(std::vector<ProbVec> generators) {
  if (generators.empty()) throw Error(ErrorKind::kEmptyInput, "extreme_points: empty generator list");
  std::vector<ProbVec> kept = sorted_unique(std::move(generators));
  for (const auto& g : kept) {
    if (g.size() != kept.front().size()) throw Error(ErrorKind::kDimensionMismatch, "generators have different dimensions");
  }
  // Removing a point inside the hull of the rest never changes the hull, so
  // one pass suffices.
  std::size_t i = 0;
  while (i < kept.size() && kept.size() > 1) {
    std::vector<ProbVec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (convex_weights(kept[i], others)) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return CredalSet(std::move(kept), true);
}

CredalSet canonical_from_vertices(std::vector<ProbVec> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::kEmptyInput, "no vertices");
  return CredalSet(sorted_unique(std::move(vertices)), true);
}

Rational upper_expectation(const CredalSet& set, const Observable& f) {
  return set[upper_expectation_argmax(set, f)].expectation(f);
}

std::size_t upper_expectation_argmax(const CredalSet& set, const Observable& f) {
  if (f.size() != set.dimension()) throw Error(ErrorKind::kDimensionMismatch, "observable length differs from state count");
  std::size_t best = 0;
  Rational best_value = set[0].expectation(f);
  for (std::size_t i = 1; i < set.size(); ++i) {
    Rational v = set[i].expectation(f);
    if (v > best_value) {
      best = i;
      best_value = std::move(v);
    }
  }
  return best;
}

Rational upper_probability(const CredalSet& set, std::span<const State> event) {
  return upper_expectation(set, indicator(set.dimension(), event));
}

namespace {

// f with f.x > max_j f.y_j, read off a Farkas certificate of x notin conv(ys).
Observable separating_observable(const ProbVec& x, std::span<const ProbVec> ys) {
  auto result = solve_feasibility(hull_system(ys), hull_rhs(x));
  if (result.feasible) throw Error(ErrorKind::kInvalidArgument, "separation requested for a hull member (internal)");
  result.certificate.pop_back();
  return Observable{std::move(result.certificate)};
}

}  // namespace

InvarianceVerdict check_invariance(const CredalSet& set, const SystemMap& map) {
  if (set.dimension() != map.size()) throw Error(ErrorKind::kDimensionMismatch, "credal set and map sizes differ");
  std::vector<ProbVec> images;
  images.reserve(set.size());
  for (const auto& g : set.generators()) images.push_back(pushforward(g, map));

  std::optional<Observable> separator;
  for (const auto& q : images) {
    if (!convex_weights(q, set.generators())) {
      separator = separating_observable(q, set.generators());
      break;
    }
  }
  if (!separator) {
    for (const auto& g : set.generators()) {
      if (!convex_weights(g, images)) {
        separator = separating_observable(g, images);
        break;
      }
    }
  }
  InvarianceVerdict verdict;
  if (!separator) {
    verdict.invariant = true;
    return verdict;
  }
  // Prefer a state indicator as the reported witness when one already works.
  const std::size_t n = set.dimension();
  for (State x = 0; x < n; ++x) {
    const State one[] = {x};
    Observable f = indicator(n, one);
    Rational lhs = upper_expectation(set, f);
    Rational rhs = upper_expectation(set, compose(f, map));
    if (lhs != rhs) {
      verdict.witness = std::move(f);
      verdict.upper_of_witness = std::move(lhs);
      verdict.upper_of_shifted_witness = std::move(rhs);
      return verdict;
    }
  }
  verdict.upper_of_witness = upper_expectation(set, *separator);
  verdict.upper_of_shifted_witness = upper_expectation(set, compose(*separator, map));
  verdict.witness = std::move(separator);
  return verdict;
}

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> hit(mapping_.size(), false);
  for (std::size_t v : mapping_) {
    if (v >= mapping_.size() || hit[v]) throw Error(ErrorKind::kInvalidArgument, "mapping is not a bijection");
    hit[v] = true;
  }
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !seen[j]; j = mapping_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles()) result = checked_lcm(result, c.size());
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (mapping_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::power(std::uint64_t k) const {
  std::vector<std::size_t> out(size());
  for (const auto& c : cycles()) {
    const std::uint64_t shift = k % c.size();
    for (std::size_t pos = 0; pos < c.size(); ++pos) out[c[pos]] = c[(pos + shift) % c.size()];
  }
  return Permutation(std::move(out));
}

Permutation pushforward_permutation(const CredalSet& set, const SystemMap& map) {
  if (!set.canonical()) throw Error(ErrorKind::kInvalidArgument, "pushforward permutation needs a canonical credal set");
  if (!check_invariance(set, map).invariant) {
    throw Error(ErrorKind::kNotInvariant, "credal set is not invariant under the map");
  }
  std::vector<std::size_t> mapping(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto j = set.index_of(pushforward(set[i], map));
    if (!j) {
      throw Error(ErrorKind::kNotVertexImage,
                  "pushforward of extreme point " + std::to_string(i) + " is not an extreme point (internal)");
    }
    mapping[i] = *j;
  }
  return Permutation(std::move(mapping));
}

ProbVec invariant_surrogate(const CredalSet& set, const SystemMap& map, const ProbVec& p) {
  if (p.size() != set.dimension()) throw Error(ErrorKind::kDimensionMismatch, "surrogate: dimension mismatch");
  if (!membership(p, set)) throw Error(ErrorKind::kNotMember, "surrogate: probability is not in the credal set");
  if (!check_invariance(set, map).invariant) throw Error(ErrorKind::kNotInvariant, "surrogate: set is not invariant");
  const OrbitStructure orbit = orbit_structure(map);
  ProbVec current = pushforward(p, compose_power(map, orbit.transient_length));
  RationalVector total(p.size(), Rational(0));
  for (std::uint64_t k = 0; k < orbit.period; ++k) {
    for (State x = 0; x < p.size(); ++x) total[x] += current[x];
    current = pushforward(current, map);
  }
  const Rational scale(1, static_cast<unsigned long>(orbit.period));
  for (auto& w : total) w *= scale;
  return ProbVec(std::move(total));
}

namespace {

/// Vertices of {P : P(A) <= V(A) for all A}, optionally cut down to the
/// T-invariant probabilities first.
CredalSet capacity_polytope(const CredalSet& set, const SystemMap* map, std::size_t state_cap) {
  const std::size_t n = set.dimension();
  if (n > state_cap || n >= 63) {
    throw Error(ErrorKind::kStateCapExceeded,
                "capacity core needs n <= " + std::to_string(state_cap) + " (got " + std::to_string(n) + ")");
  }
  VertexEnumerator enumerator(n);
  if (map != nullptr) {
    if (map->size() != n) throw Error(ErrorKind::kDimensionMismatch, "map size differs from the credal set dimension");
    // P(T^-1 {y}) - P(y) = 0 for every y.
    for (State y = 0; y < n; ++y) {
      RationalVector normal(n, Rational(0));
      for (State x = 0; x < n; ++x) {
        if ((*map)(x) == y) normal[x] += 1;
      }
      normal[y] -= 1;
      enumerator.add_equality(normal, 0);
    }
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<State> event;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    event.clear();
    RationalVector normal(n, Rational(0));
    for (State x = 0; x < n; ++x) {
      if (mask >> x & 1U) {
        event.push_back(x);
        normal[x] = 1;
      }
    }
    enumerator.add_inequality(normal, upper_probability(set, event));
  }
  std::vector<ProbVec> vertices;
  vertices.reserve(enumerator.vertices().size());
  for (const auto& v : enumerator.vertices()) vertices.emplace_back(v);
  return canonical_from_vertices(std::move(vertices));
}

}  // namespace

CredalSet core_of_capacity(const CredalSet& set, std::size_t state_cap) {
  return capacity_polytope(set, nullptr, state_cap);
}

CredalSet invariant_core(const CredalSet& set, const SystemMap& map, std::size_t state_cap) {
  return capacity_polytope(set, &map, state_cap);
}

}  // namespace isex
