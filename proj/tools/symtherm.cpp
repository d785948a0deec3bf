// Batch front-end: parse model/symmetry config files, run sweeps and checks,
// emit CSV/JSON artifacts.

#include <CLI11.hpp>
#include <iostream>

#include "symtherm/errors.hpp"
#include "symtherm/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{"symmetric thermal ensembles: negativity sweeps and persistence checks"};
  app.require_subcommand(1);

  symtherm::CliOptions options;
  std::string command;
  for (const char* name : {"sweep", "check", "classify", "locality"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", options.config_path, "JSON config file")->required();
    sub->add_option("--out", options.out_path, "output path (default: stdout)");
    sub->add_option("--format", options.format, "csv|json (sweep output)");
    sub->add_option("--threads", options.threads, "worker pool size");
    sub->add_option("--seed", options.seed, "seed for randomized check fixtures");
    sub->callback([&command, name] { command = name; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    return symtherm::run_command(command, options);
  } catch (const symtherm::numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const symtherm::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
}
