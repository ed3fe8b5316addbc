// Command-line front end: `wigprop run` and `wigprop validate`.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wigprop/app.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Wigner function propagation by spectral split-operator steps"};
  app.require_subcommand(1);

  std::string run_config;
  std::string output_dir;
  auto* run = app.add_subcommand("run", "propagate a configured state");
  run->add_option("--config", run_config, "run configuration (JSON)")
      ->required();
  run->add_option("--output-dir", output_dir,
                  "overrides output.directory from the config");

  std::string validate_config;
  auto* validate = app.add_subcommand(
      "validate", "cross-check against the wavefunction propagator");
  validate->add_option("--config", validate_config, "run configuration (JSON)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : wigprop::kExitConfigError;
  }

  wigprop::apply_thread_env();

  if (*run) {
    std::optional<std::filesystem::path> dir;
    if (!output_dir.empty()) dir = output_dir;
    return wigprop::run_command(run_config, dir, std::cout, std::cerr);
  }
  return wigprop::validate_command(validate_config, std::cout, std::cerr);
}
