#pragma once

#include <string>

namespace symtherm {

struct CliOptions {
  std::string config_path;
  std::string out_path;        // empty writes to stdout
  std::string format = "csv";  // csv | json (sweep, locality)
  int threads = 1;
  unsigned long long seed = 0;  // only affects randomized check fixtures
};

/// Batch commands; each returns the full artifact (CSV or JSON text).
/// Deterministic given the config: fixed float formatting (12 significant
/// digits), '\n' line endings, and every row echoing the config hash.
std::string run_sweep(const CliOptions& options);
std::string run_check(const CliOptions& options);
std::string run_classify(const CliOptions& options);
std::string run_locality(const CliOptions& options);

/// Dispatch by subcommand name and write the artifact to out_path/stdout.
int run_command(const std::string& command, const CliOptions& options);

}  // namespace symtherm
