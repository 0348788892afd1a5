#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isex/credal_set.hpp"
#include "isex/system.hpp"

namespace isex {

/// A map with a credal set invariant under it.
struct GallerySystem {
  SystemMap map;
  CredalSet credal;
  std::string label;
};

/// q-cycle carrying conv{delta_0, ..., delta_{q-1}}; the vertex period is q.
GallerySystem gen_cycle(std::size_t q);

inline constexpr std::size_t kDefaultProductStateCap = 4096;

/// Words of length m over s symbols (word w_0..w_{m-1} has index
/// sum w_i s^(m-1-i)), T the cyclic left shift, generators all products of
/// per-coordinate marginal choices. The shift rotates choice vectors, so the
/// set is invariant by construction.
GallerySystem gen_product_shift(std::size_t s, std::size_t m, const std::vector<ProbVec>& marginals,
                                std::size_t state_cap = kDefaultProductStateCap);

/// Random map and k random probability vectors, closed under the eventual
/// pushforward cycle of each vector and canonicalised. Deterministic per seed.
/// Throws kCapExceeded when more than `max_generators` extreme points result.
GallerySystem gen_random_invariant(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t max_generators = 12);

}  // namespace isex
