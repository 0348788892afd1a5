#include "isex/system.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "isex/error.hpp"

namespace isex {

SystemMap::SystemMap(std::vector<State> images) : images_(std::move(images)) {
  if (images_.empty()) throw Error(ErrorKind::kInvalidArgument, "a system needs at least one state");
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] >= images_.size()) {
      throw Error(ErrorKind::kBadMap, "map entry " + std::to_string(x) + " is " + std::to_string(images_[x]) +
                                          ", outside [0, " + std::to_string(images_.size()) + ")");
    }
  }
}

SystemMap SystemMap::identity(std::size_t n) {
  std::vector<State> images(n);
  std::iota(images.begin(), images.end(), State{0});
  return SystemMap(std::move(images));
}

SystemMap SystemMap::cycle(std::size_t q) {
  std::vector<State> images(q);
  for (std::size_t x = 0; x < q; ++x) images[x] = (x + 1) % q;
  return SystemMap(std::move(images));
}

SystemMap SystemMap::then(const SystemMap& other) const {
  if (other.size() != size()) throw Error(ErrorKind::kDimensionMismatch, "composing maps of different sizes");
  std::vector<State> images(size());
  for (std::size_t x = 0; x < size(); ++x) images[x] = other(images_[x]);
  return SystemMap(std::move(images));
}

SystemMap compose_power(const SystemMap& map, std::uint64_t k) {
  SystemMap result = SystemMap::identity(map.size());
  SystemMap base = map;
  while (k > 0) {
    if (k & 1U) result = result.then(base);
    k >>= 1U;
    if (k > 0) base = base.then(base);
  }
  return result;
}

Observable compose(const Observable& f, const SystemMap& map) {
  if (f.size() != map.size()) throw Error(ErrorKind::kDimensionMismatch, "observable length differs from state count");
  Observable out{RationalVector(f.size())};
  for (std::size_t x = 0; x < f.size(); ++x) out.values[x] = f[map(x)];
  return out;
}

Observable operator+(const Observable& a, const Observable& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimensionMismatch, "observable length mismatch");
  Observable out = a;
  for (std::size_t x = 0; x < a.size(); ++x) out.values[x] += b[x];
  return out;
}

Observable operator-(const Observable& a, const Observable& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimensionMismatch, "observable length mismatch");
  Observable out = a;
  for (std::size_t x = 0; x < a.size(); ++x) out.values[x] -= b[x];
  return out;
}

Observable operator-(const Observable& a) {
  Observable out = a;
  for (auto& v : out.values) v = -v;
  return out;
}

Observable operator*(const Rational& scale, const Observable& f) {
  Observable out = f;
  for (auto& v : out.values) v *= scale;
  return out;
}

Observable constant_observable(std::size_t n, const Rational& value) { return Observable{RationalVector(n, value)}; }

Observable indicator(std::size_t n, std::span<const State> set) {
  Observable out{RationalVector(n, Rational(0))};
  for (State x : set) {
    if (x >= n) throw Error(ErrorKind::kInvalidState, "state " + std::to_string(x) + " out of range");
    out.values[x] = 1;
  }
  return out;
}

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t g = std::gcd(a, b);
  const std::uint64_t q = a / g;
  if (b != 0 && q > std::numeric_limits<std::uint64_t>::max() / b) {
    throw Error(ErrorKind::kCapExceeded, "period does not fit in 64 bits");
  }
  return q * b;
}

OrbitStructure orbit_structure(const SystemMap& map) {
  const std::size_t n = map.size();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  OrbitStructure out;
  out.transient.assign(n, kUnset);
  out.cycle_of.assign(n, kUnset);

  // 0 = unvisited, 1 = on the current walk, 2 = resolved.
  std::vector<unsigned char> color(n, 0);
  std::vector<State> walk;
  for (State start = 0; start < n; ++start) {
    if (color[start] != 0) continue;
    walk.clear();
    State x = start;
    while (color[x] == 0) {
      color[x] = 1;
      walk.push_back(x);
      x = map(x);
    }
    std::size_t resolved_prefix = walk.size();
    if (color[x] == 1) {
      // Closed a new cycle at x.
      const auto pos = static_cast<std::size_t>(std::find(walk.begin(), walk.end(), x) - walk.begin());
      std::vector<State> cycle(walk.begin() + static_cast<std::ptrdiff_t>(pos), walk.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      const std::size_t id = out.cycles.size();
      for (State y : cycle) {
        out.transient[y] = 0;
        out.cycle_of[y] = id;
        color[y] = 2;
      }
      out.cycles.push_back(std::move(cycle));
      resolved_prefix = pos;
    }
    for (std::size_t i = resolved_prefix; i-- > 0;) {
      const State y = walk[i];
      out.transient[y] = out.transient[map(y)] + 1;
      out.cycle_of[y] = out.cycle_of[map(y)];
      color[y] = 2;
    }
  }

  // Renumber cycles by smallest state so the structure is canonical.
  std::vector<std::size_t> order(out.cycles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return out.cycles[a][0] < out.cycles[b][0]; });
  std::vector<std::size_t> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  std::vector<std::vector<State>> sorted(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = std::move(out.cycles[order[i]]);
  out.cycles = std::move(sorted);
  for (auto& id : out.cycle_of) id = rank[id];

  out.transient_length = *std::max_element(out.transient.begin(), out.transient.end());
  out.period = 1;
  for (const auto& cycle : out.cycles) out.period = checked_lcm(out.period, cycle.size());
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

InvariantPartition invariant_partition(const SystemMap& map, std::uint64_t d) {
  if (d == 0) throw Error(ErrorKind::kInvalidArgument, "invariant partition needs d >= 1");
  const SystemMap step = compose_power(map, d);
  const std::size_t n = map.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (State x = 0; x < n; ++x) {
    const auto a = find_root(parent, x);
    const auto b = find_root(parent, step(x));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  InvariantPartition out;
  out.d = d;
  out.atom_of.assign(n, 0);
  std::vector<std::size_t> atom_of_root(n, std::numeric_limits<std::size_t>::max());
  for (State x = 0; x < n; ++x) {
    const auto root = find_root(parent, x);
    if (atom_of_root[root] == std::numeric_limits<std::size_t>::max()) {
      atom_of_root[root] = out.atoms.size();
      out.atoms.emplace_back();
    }
    out.atom_of[x] = atom_of_root[root];
    out.atoms[atom_of_root[root]].push_back(x);
  }
  return out;
}

}  // namespace isex
