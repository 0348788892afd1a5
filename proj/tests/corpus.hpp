// The seeded corpus of random invariant systems used by the property suites.
#pragma once

#include <vector>

#include "isex/error.hpp"
#include "isex/gallery.hpp"

namespace isex::testing {

inline constexpr std::size_t kCorpusMaxStates = 8;
inline constexpr std::size_t kCorpusMaxGenerators = 6;

/// Instances with n in 2..8 and 1..3 seed probabilities. Seeds whose orbit
/// hull has more than six extreme points are skipped, so the corpus is the
/// first `count` accepted seeds starting from `first_seed`.
inline std::vector<GallerySystem> random_corpus(std::size_t count, std::uint64_t first_seed = 1) {
  std::vector<GallerySystem> out;
  for (std::uint64_t seed = first_seed; out.size() < count; ++seed) {
    const std::size_t n = 2 + seed % (kCorpusMaxStates - 1);
    const std::size_t k = 1 + (seed / 7) % 3;
    try {
      out.push_back(gen_random_invariant(n, k, seed, kCorpusMaxGenerators));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCapExceeded) throw;
    }
  }
  return out;
}

}  // namespace isex::testing
