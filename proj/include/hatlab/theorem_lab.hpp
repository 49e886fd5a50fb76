#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hatlab {

struct Violation {
  std::string description;
  nlohmann::ordered_json witness;  // game, coloring and/or predictor tables
};

struct TheoremReport {
  std::string theorem;
  nlohmann::ordered_json params;
  std::uint64_t instances = 0;
  std::uint64_t consistent = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  double runtime_seconds = 0.0;
};

// Names: f2vcyclic, ffvcomplete, average, useful-props, after-ffva,
// after-fiva, first-group, robust-parity. Unspecified params take defaults;
// unknown names throw kUnknownTheorem.
TheoremReport check_theorem(const std::string& name, const nlohmann::json& params = nlohmann::json::object());

std::vector<std::string> theorem_names();

// Stable field order; runtime is left out so equal runs serialize equally.
nlohmann::ordered_json theorem_report_to_json(const TheoremReport& r);

}  // namespace hatlab
