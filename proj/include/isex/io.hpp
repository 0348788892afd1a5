#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "isex/credal_set.hpp"
#include "isex/system.hpp"

namespace isex {

using Json = nlohmann::ordered_json;

/// {"n": 2, "map": [1, 0], "generators": [["1", "0"], ["0", "1"]], "label": "swap"}
/// Rationals are strings "p/q" or "p" in lowest terms.
struct SystemDocument {
  SystemMap map;
  CredalSet credal;
  std::optional<std::string> label;
};

/// Throws kMalformedJson (syntax or schema), kNotAProbability (row index and
/// reason) or kBadMap (entry out of range).
SystemDocument parse_system(std::string_view document);

/// Canonical key order n, map, generators, label; generators as given.
Json system_to_json(const SystemDocument& system);
std::string serialize_system(const SystemDocument& system);

Json to_json(const Rational& value);
Json to_json(const ProbVec& p);
Json to_json(const Observable& f);
Json to_json(const CredalSet& set);

/// Text rendering of a report: one "key: value" per line, nested by indentation.
std::string render_text(const Json& report);

}  // namespace isex
