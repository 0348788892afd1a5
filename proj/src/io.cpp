#include "isex/io.hpp"

#include <sstream>

#include "isex/error.hpp"

namespace isex {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::kMalformedJson, what); }

Rational rational_field(const Json& node, const std::string& where) {
  if (!node.is_string()) malformed(where + ": expected a rational string such as \"1/3\"");
  try {
    return parse_rational(node.get<std::string>(), /*require_canonical=*/true);
  } catch (const Error& e) {
    malformed(where + ": " + e.what());
  }
}

}  // namespace

SystemDocument parse_system(std::string_view document) {
  Json root;
  try {
    root = Json::parse(document.begin(), document.end());
  } catch (const nlohmann::json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) malformed("document must be a JSON object");
  for (const char* key : {"n", "map", "generators"}) {
    if (!root.contains(key)) malformed(std::string("missing field '") + key + "'");
  }
  if (!root["n"].is_number_unsigned() || root["n"].get<std::size_t>() == 0) malformed("'n' must be a positive integer");
  const auto n = root["n"].get<std::size_t>();

  const Json& map_node = root["map"];
  if (!map_node.is_array() || map_node.size() != n) malformed("'map' must be an array of length n = " + std::to_string(n));
  std::vector<State> images;
  for (std::size_t x = 0; x < n; ++x) {
    const Json& entry = map_node[x];
    if (entry.is_number_integer() && entry.get<std::int64_t>() < 0) {
      throw Error(ErrorKind::kBadMap, "map[" + std::to_string(x) + "] = " + entry.dump() + " is negative");
    }
    if (!entry.is_number_unsigned()) malformed("map[" + std::to_string(x) + "] must be a state index");
    images.push_back(entry.get<State>());
  }
  SystemMap map(std::move(images));

  const Json& gens = root["generators"];
  if (!gens.is_array() || gens.empty()) malformed("'generators' must be a nonempty array");
  std::vector<ProbVec> generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_array() || gens[i].size() != n) malformed(where + " must be an array of length n = " + std::to_string(n));
    RationalVector weights;
    for (std::size_t x = 0; x < n; ++x) weights.push_back(rational_field(gens[i][x], where + "[" + std::to_string(x) + "]"));
    try {
      generators.emplace_back(std::move(weights));
    } catch (const Error& e) {
      throw Error(ErrorKind::kNotAProbability, where + ": " + e.what());
    }
  }

  std::optional<std::string> label;
  if (root.contains("label")) {
    if (!root["label"].is_string()) malformed("'label' must be a string");
    label = root["label"].get<std::string>();
  }
  return {std::move(map), CredalSet(std::move(generators)), std::move(label)};
}

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const ProbVec& p) {
  Json out = Json::array();
  for (const auto& w : p.weights()) out.push_back(to_string(w));
  return out;
}

Json to_json(const Observable& f) {
  Json out = Json::array();
  for (const auto& v : f.values) out.push_back(to_string(v));
  return out;
}

Json to_json(const CredalSet& set) {
  Json out = Json::array();
  for (const auto& g : set.generators()) out.push_back(to_json(g));
  return out;
}

Json system_to_json(const SystemDocument& system) {
  Json out;
  out["n"] = system.map.size();
  out["map"] = Json(std::vector<State>(system.map.images().begin(), system.map.images().end()));
  out["generators"] = to_json(system.credal);
  if (system.label) out["label"] = *system.label;
  return out;
}

std::string serialize_system(const SystemDocument& system) { return system_to_json(system).dump(2) + "\n"; }

namespace {

bool is_scalar_array(const Json& node) {
  if (!node.is_array()) return false;
  for (const auto& item : node) {
    if (item.is_structured()) return false;
  }
  return true;
}

std::string scalar_text(const Json& node) {
  if (node.is_string()) return node.get<std::string>();
  if (is_scalar_array(node)) {
    std::string out = "(";
    for (std::size_t i = 0; i < node.size(); ++i) out += (i ? ", " : "") + scalar_text(node[i]);
    return out + ")";
  }
  return node.dump();
}

void render(const Json& node, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_structured() && !is_scalar_array(value)) {
        out << pad << key << ":\n";
        render(value, indent + 1, out);
      } else {
        out << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (node.is_array() && !is_scalar_array(node)) {
    for (const auto& item : node) {
      if (item.is_structured() && !is_scalar_array(item)) {
        out << pad << "-\n";
        render(item, indent + 1, out);
      } else {
        out << pad << "- " << scalar_text(item) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(node) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace isex
