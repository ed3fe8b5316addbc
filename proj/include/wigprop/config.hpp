#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "wigprop/potentials.hpp"
#include "wigprop/propagator.hpp"
#include "wigprop/states.hpp"

namespace wigprop {

/// Invalid run configuration. key() is the dotted path of the offending
/// entry, e.g. "grid.nx".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

enum class OutputFormat { Csv, Raw64 };

/// Largest grid (nx * np) written as CSV.
inline constexpr std::size_t kMaxCsvCells = 256 * 256;

struct GridConfig {
  std::size_t nx = 0;
  std::size_t np = 0;
  double lx = 0.0;
  double lp = 0.0;
  double hbar = 1.0;
};

struct PropagationConfig {
  PropagationSettings settings;
  std::size_t n_steps = 1;
  std::size_t snapshot_every = 0;
};

struct OutputConfig {
  std::string directory = "wigprop_out";
  OutputFormat format = OutputFormat::Raw64;
  bool emit_marginals = false;
};

/// Pass thresholds for the `validate` subcommand.
struct ValidationThresholds {
  double max_linf_rel = 1e-4;
  double max_l2_rel = 1e-4;
};

struct RunConfig {
  GridConfig grid;
  PotentialSpec potential = PotentialSpec::free();
  StateSpec state;
  PropagationConfig propagation;
  OutputConfig output;
  ValidationThresholds validation;
  /// Canonical JSON of the parsed document, echoed into metadata.json.
  std::string echo;
};

/// Parses a JSON document (comments allowed). Every key is checked against
/// the schema; unknown keys and out-of-range values raise ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace wigprop
