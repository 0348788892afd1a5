#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isex/io.hpp"

namespace isex {

/// Options shared by all subcommands; unset fields take per-command defaults.
struct CommandOptions {
  std::optional<std::string> input_path;
  /// Inline document, used instead of reading `input_path` (tests, bindings).
  std::optional<std::string> input_text;
  std::optional<std::uint64_t> d;
  std::optional<std::string> f;
  std::optional<std::uint64_t> l_max;
  std::uint64_t seed = 0;
  /// ergodic: length of sampled paths for the Monte Carlo demonstration (0 = off).
  std::uint64_t simulate = 0;

  // gallery
  std::string kind = "cycle";
  std::size_t q = 2;
  std::size_t s = 2;
  std::size_t m = 2;
  std::vector<std::string> marginals;
  std::size_t n = 5;
  std::size_t k = 3;
};

struct CommandResult {
  Json report;
  /// 0: every check passed, 1: a check failed, 2: input or precondition error.
  int exit_code = 0;
  /// Diagnostic for stderr when exit_code is 2.
  std::string diagnostic;
};

inline constexpr std::string_view kSubcommands[] = {"validate", "analyze", "decompose", "periods",
                                                    "ergodic", "check-theorems", "gallery"};

/// Runs one subcommand. Library errors become exit code 2 with a report of
/// the form {"error": kind, "message": ...}; the function itself does not throw.
CommandResult run_subcommand(std::string_view name, const CommandOptions& options);

}  // namespace isex
