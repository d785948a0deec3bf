#pragma once

#include <stdexcept>
#include <string>

namespace symtherm {

/// Malformed or inconsistent user input (config files, model/symmetry specs).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical breakdown (e.g. eigensolver non-convergence).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symtherm
