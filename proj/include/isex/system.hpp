#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "isex/rational.hpp"

namespace isex {

using State = std::size_t;

/// Deterministic self-map on states {0, ..., n-1}.
class SystemMap {
 public:
  /// Throws kInvalidArgument when empty and kBadMap when an entry is out of range.
  explicit SystemMap(std::vector<State> images);

  static SystemMap identity(std::size_t n);
  /// 0 -> 1 -> ... -> q-1 -> 0.
  static SystemMap cycle(std::size_t q);

  std::size_t size() const noexcept { return images_.size(); }
  State operator()(State x) const { return images_[x]; }
  std::span<const State> images() const noexcept { return images_; }

  /// Returns the map x -> other(self(x)).
  SystemMap then(const SystemMap& other) const;

  bool operator==(const SystemMap&) const = default;

 private:
  std::vector<State> images_;
};

/// T^k, with T^0 the identity.
SystemMap compose_power(const SystemMap& map, std::uint64_t k);

/// Real-valued function on states, f(x) = values[x].
struct Observable {
  RationalVector values;

  std::size_t size() const noexcept { return values.size(); }
  const Rational& operator[](State x) const { return values[x]; }
  bool operator==(const Observable&) const = default;
};

/// f o T.
Observable compose(const Observable& f, const SystemMap& map);
Observable operator+(const Observable& a, const Observable& b);
Observable operator-(const Observable& a, const Observable& b);
Observable operator-(const Observable& a);
Observable operator*(const Rational& scale, const Observable& f);
Observable constant_observable(std::size_t n, const Rational& value);
Observable indicator(std::size_t n, std::span<const State> set);

struct OrbitStructure {
  /// Steps before state x lands on a cycle.
  std::vector<std::size_t> transient;
  /// Index into `cycles` of the cycle that x eventually enters.
  std::vector<std::size_t> cycle_of;
  /// Each cycle lists its states in forward order starting from its smallest state.
  std::vector<std::vector<State>> cycles;
  /// Minimal l >= 0 and c >= 1 with T^(l+c) = T^l.
  std::size_t transient_length = 0;
  std::uint64_t period = 1;

  bool on_cycle(State x) const { return transient[x] == 0; }
};

OrbitStructure orbit_structure(const SystemMap& map);

/// Atoms of the T^d-invariant sets: connected components of the undirected
/// graph with edges {x, T^d x}. A set is T^d-invariant iff it is a union of atoms.
struct InvariantPartition {
  std::uint64_t d = 1;
  std::vector<std::vector<State>> atoms;
  std::vector<std::size_t> atom_of;
};

InvariantPartition invariant_partition(const SystemMap& map, std::uint64_t d);

/// lcm that throws kCapExceeded on 64-bit overflow.
std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b);

}  // namespace isex
