#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "symtherm/models.hpp"
#include "symtherm/symmetry.hpp"

namespace symtherm {

/// Read a whole file; config_error on failure.
std::string read_file(const std::string& path);

/// Parse the symmetry spec document:
///   {"group": {"finite": [n1,...]} | {"u1": true},
///    "site_rep": {"paulis": [..]} | {"diag_phases": [[..],..]} | {"charges": [..]},
///    "n_sites": N}
Representation parse_symmetry_json(const std::string& text);

/// Parse the model document (spin term list, fermionic term list, or preset).
ModelSpec parse_model_json(const std::string& text);

/// FNV-1a 64-bit; used as the config fingerprint echoed into every artifact.
uint64_t fnv1a(std::string_view text);
std::string hash_hex(uint64_t h);

/// Fixed float formatting for artifacts: 12 significant digits, '.' decimal.
std::string format_g12(double v);

}  // namespace symtherm
