#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace isex {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p/q" or "p". With `require_canonical`, rejects inputs that are not
/// already in lowest terms ("2/4", "3/1", "-0").
Rational parse_rational(std::string_view text, bool require_canonical = false);

/// Parses a comma-separated list such as "1,0,-1/2".
RationalVector parse_rational_list(std::string_view text);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& value);

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace isex
