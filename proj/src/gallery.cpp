#include "isex/gallery.hpp"

#include <numeric>
#include <string>

#include "isex/error.hpp"
#include "isex/random.hpp"

namespace isex {

Observable random_observable(std::size_t n, Rng& rng, std::int64_t range) {
  Observable f{RationalVector(n)};
  const auto width = static_cast<std::uint64_t>(2 * range + 1);
  for (auto& v : f.values) v = make_rational(static_cast<std::int64_t>(rng.below(width)) - range);
  return f;
}

ProbVec random_probability(std::size_t n, Rng& rng) {
  RationalVector w(n, Rational(0));
  switch (rng.below(3)) {
    case 0:
      w[rng.below(n)] = 1;
      break;
    case 1: {
      const auto a = static_cast<std::int64_t>(rng.below(3) + 1);
      const auto b = static_cast<std::int64_t>(rng.below(3) + 1);
      w[rng.below(n)] += make_rational(a, a + b);
      w[rng.below(n)] += make_rational(b, a + b);
      break;
    }
    default: {
      std::int64_t total = 0;
      std::vector<std::int64_t> raw(n);
      for (auto& r : raw) {
        r = static_cast<std::int64_t>(rng.below(5));
        total += r;
      }
      if (total == 0) {
        raw[rng.below(n)] = 1;
        total = 1;
      }
      for (std::size_t x = 0; x < n; ++x) w[x] = make_rational(raw[x], total);
    }
  }
  return ProbVec(std::move(w));
}

GallerySystem gen_cycle(std::size_t q) {
  if (q == 0) throw Error(ErrorKind::kInvalidArgument, "cycle length must be >= 1");
  std::vector<ProbVec> points;
  for (State x = 0; x < q; ++x) points.push_back(ProbVec::point_mass(q, x));
  return {SystemMap::cycle(q), canonical_from_vertices(std::move(points)), "cycle q=" + std::to_string(q)};
}

GallerySystem gen_product_shift(std::size_t s, std::size_t m, const std::vector<ProbVec>& marginals,
                                std::size_t state_cap) {
  if (s < 2) throw Error(ErrorKind::kInvalidArgument, "product shift needs an alphabet of at least 2 symbols");
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "product shift needs word length >= 1");
  if (marginals.empty()) throw Error(ErrorKind::kEmptyInput, "product shift needs at least one marginal");
  for (const auto& mu : marginals) {
    if (mu.size() != s) throw Error(ErrorKind::kDimensionMismatch, "marginal length differs from the alphabet size");
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (n > state_cap / s) {
      throw Error(ErrorKind::kCapExceeded, "s^m exceeds the state cap " + std::to_string(state_cap));
    }
    n *= s;
  }
  const std::size_t k = marginals.size();
  std::size_t choices = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (choices > 4096 / k) throw Error(ErrorKind::kCapExceeded, "too many product generators (k^m > 4096)");
    choices *= k;
  }

  std::vector<State> images(n);
  std::size_t top = n / s;  // s^(m-1)
  for (State w = 0; w < n; ++w) images[w] = (w % top) * s + w / top;

  std::vector<ProbVec> generators;
  std::vector<std::size_t> choice(m, 0);
  for (std::size_t c = 0; c < choices; ++c) {
    std::size_t rest = c;
    for (std::size_t i = m; i-- > 0;) {
      choice[i] = rest % k;
      rest /= k;
    }
    RationalVector w(n);
    for (State word = 0; word < n; ++word) {
      Rational p = 1;
      std::size_t digits = word;
      for (std::size_t i = m; i-- > 0;) {
        p *= marginals[choice[i]][digits % s];
        digits /= s;
      }
      w[word] = std::move(p);
    }
    generators.emplace_back(std::move(w));
  }
  return {SystemMap(std::move(images)), extreme_points(std::move(generators)),
          "product shift s=" + std::to_string(s) + " m=" + std::to_string(m) + " k=" + std::to_string(k)};
}

GallerySystem gen_random_invariant(std::size_t n, std::size_t k, std::uint64_t seed, std::size_t max_generators) {
  if (n == 0 || k == 0) throw Error(ErrorKind::kInvalidArgument, "random system needs n >= 1 and k >= 1");
  Rng rng(seed);
  std::vector<State> images(n);
  if (rng.below(2) == 0) {
    std::iota(images.begin(), images.end(), State{0});
    for (std::size_t i = n; i-- > 1;) std::swap(images[i], images[rng.below(i + 1)]);
  } else {
    for (auto& y : images) y = rng.below(n);
  }
  SystemMap map(std::move(images));
  const OrbitStructure orbit = orbit_structure(map);
  const SystemMap settle = compose_power(map, orbit.transient_length);

  std::vector<ProbVec> points;
  for (std::size_t i = 0; i < k; ++i) {
    ProbVec current = pushforward(random_probability(n, rng), settle);
    for (std::uint64_t step = 0; step < orbit.period; ++step) {
      points.push_back(current);
      current = pushforward(current, map);
      if (points.size() > 64 * max_generators) {
        throw Error(ErrorKind::kCapExceeded, "random system generator orbit too long");
      }
    }
  }
  CredalSet credal = extreme_points(std::move(points));
  if (credal.size() > max_generators) {
    throw Error(ErrorKind::kCapExceeded, "random system has " + std::to_string(credal.size()) +
                                             " extreme points; the cap is " + std::to_string(max_generators));
  }
  return {std::move(map), std::move(credal),
          "random n=" + std::to_string(n) + " k=" + std::to_string(k) + " seed=" + std::to_string(seed)};
}

}  // namespace isex
