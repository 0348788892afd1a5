#include "isex/rational.hpp"

#include <cctype>

#include "isex/error.hpp"

namespace isex {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kInvalidState: return "InvalidState";
    case ErrorKind::kNotAProbability: return "NotAProbability";
    case ErrorKind::kEmptyInput: return "EmptyInput";
    case ErrorKind::kNotInvariant: return "NotInvariant";
    case ErrorKind::kNotVertexImage: return "NotVertexImage";
    case ErrorKind::kNotMember: return "NotMember";
    case ErrorKind::kNotDivisible: return "NotDivisible";
    case ErrorKind::kNotInvariantProbability: return "NotInvariantProbability";
    case ErrorKind::kStateCapExceeded: return "StateCapExceeded";
    case ErrorKind::kAtomCapExceeded: return "AtomCapExceeded";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kNoAchiever: return "NoAchiever";
    case ErrorKind::kMalformedJson: return "MalformedJson";
    case ErrorKind::kBadMap: return "BadMap";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text, bool require_canonical) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && (den.empty() || den.front() == '-' ||
                                                                       !is_integer_literal(den)))) {
    throw Error(ErrorKind::kInvalidArgument, "not a rational literal: '" + std::string(text) + "'");
  }
  Rational value;
  value.get_num() = mpz_class(std::string(num));
  value.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (value.get_den() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "zero denominator: '" + std::string(text) + "'");
  }
  value.canonicalize();
  if (require_canonical && to_string(value) != s) {
    throw Error(ErrorKind::kInvalidArgument,
                "rational not in lowest terms: '" + std::string(text) + "' (expected '" + to_string(value) + "')");
  }
  return value;
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_rational(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  Rational r(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  r.canonicalize();
  return r;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimensionMismatch, "dot: length mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace isex
