#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "wigprop/config.hpp"
#include "wigprop/field.hpp"
#include "wigprop/observables.hpp"

namespace wigprop {

/// Re W as little-endian float64, row-major with x slow and p fast.
void write_raw64(const std::filesystem::path& path, const Field& w);
/// Reads a raw64 snapshot back into an nx x np row-major vector.
std::vector<double> read_raw64(const std::filesystem::path& path,
                               std::size_t expected_count);

/// Header `x,p,w`, one line per cell (x slow). Refuses grids above
/// kMaxCsvCells.
void write_csv(const std::filesystem::path& path, const Field& w);

/// Two files: <stem>_x.csv (x,rho_x) and <stem>_p.csv (p,rho_p).
void write_marginals(const std::filesystem::path& dir, const std::string& stem,
                     const Field& w);

/// "W_00042.raw64" style name for a snapshot at the given step.
std::string snapshot_name(std::size_t step, OutputFormat format);

class DiagnosticsWriter {
 public:
  explicit DiagnosticsWriter(const std::filesystem::path& path);
  void write(const DiagnosticsRecord& r);

 private:
  std::ofstream out_;
};

struct SnapshotEntry {
  std::string file;
  std::size_t step = 0;
  double t = 0.0;
};

/// Grid, axis order, dtype, endianness, snapshot index and the config echo.
void write_metadata(const std::filesystem::path& path, const RunConfig& config,
                    const Grid& grid,
                    const std::vector<SnapshotEntry>& snapshots);

}  // namespace wigprop
