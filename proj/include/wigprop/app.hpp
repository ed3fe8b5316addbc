#pragma once

#include <filesystem>
#include <optional>
#include <ostream>

namespace wigprop {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailed = 1,
  kExitConfigError = 2,
  kExitNumericalError = 3,
  kExitIoError = 4,
};

/// `run`: propagate the configured state and write snapshots,
/// diagnostics.csv and metadata.json.
int run_command(const std::filesystem::path& config_path,
                const std::optional<std::filesystem::path>& output_dir,
                std::ostream& out, std::ostream& err);

/// `validate`: cross-check against the wavefunction propagator and compare
/// with the thresholds of the config's validation block.
int validate_command(const std::filesystem::path& config_path,
                     std::ostream& out, std::ostream& err);

/// Reads WIGPROP_THREADS and applies it to the transform layer.
void apply_thread_env();

}  // namespace wigprop
