#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isex {

enum class ErrorKind {
  kInvalidArgument,
  kDimensionMismatch,
  kInvalidState,
  kNotAProbability,
  kEmptyInput,
  kNotInvariant,
  kNotVertexImage,
  kNotMember,
  kNotDivisible,
  kNotInvariantProbability,
  kStateCapExceeded,
  kAtomCapExceeded,
  kCapExceeded,
  kNoAchiever,
  kMalformedJson,
  kBadMap,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI,
/// the Python layer) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace isex
