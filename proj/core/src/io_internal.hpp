#pragma once

// JSON-level parsing shared between io.cpp and harness.cpp; not installed.

#include <json.hpp>
#include <optional>
#include <string>

#include "symtherm/models.hpp"
#include "symtherm/symmetry.hpp"

namespace symtherm::detail {

using nlohmann::json;

Representation symmetry_from_json(const json& j);

struct ParsedModel {
  ModelSpec spec;
  bool is_preset = false;
  std::string preset;
  PresetParams params;
};

ParsedModel model_from_json(const json& j);

/// Rebuild a preset model at a different size (locality N-sweeps).
ModelSpec preset_at_size(const ParsedModel& model, int n_sites);

json parse_text(const std::string& text);

}  // namespace symtherm::detail
