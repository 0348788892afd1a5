#pragma once

#include <cstdint>

#include "isex/credal_set.hpp"
#include "isex/system.hpp"

namespace isex {

/// splitmix64. Used instead of <random> distributions because their output
/// is implementation-defined and reports must be byte-stable per seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw from [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Integer-valued observable with entries in [-range, range].
Observable random_observable(std::size_t n, Rng& rng, std::int64_t range = 5);

/// Random rational probability vector: a point mass, a two-point mixture or a
/// full-support vector with small integer weights.
ProbVec random_probability(std::size_t n, Rng& rng);

}  // namespace isex
