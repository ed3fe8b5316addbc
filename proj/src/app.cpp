#include "wigprop/app.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "wigprop/config.hpp"
#include "wigprop/oracle.hpp"
#include "wigprop/output.hpp"
#include "wigprop/propagator.hpp"
#include "wigprop/transforms.hpp"

namespace wigprop {

namespace {

double relative_drift(double first, double last) {
  return first != 0.0 ? std::abs(last - first) / std::abs(first)
                      : std::abs(last - first);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

void apply_thread_env() {
  if (const char* env = std::getenv("WIGPROP_THREADS")) {
    try {
      set_transform_threads(std::stoi(env));
    } catch (const std::exception&) {
      // Ignore malformed values; keep the default.
    }
  }
}

int run_command(const std::filesystem::path& config_path,
                const std::optional<std::filesystem::path>& output_dir,
                std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
  if (output_dir) cfg.output.directory = output_dir->string();

  const auto started = std::chrono::steady_clock::now();
  try {
    const auto grid = make_shared_grid(cfg.grid.nx, cfg.grid.np, cfg.grid.lx,
                                       cfg.grid.lp, cfg.grid.hbar);
    const std::filesystem::path dir = cfg.output.directory;
    std::filesystem::create_directories(dir);

    Field w0 = build_state(grid, cfg.state);
    const PropagatorPlan plan(grid, cfg.potential, cfg.propagation.settings);

    DiagnosticsWriter diagnostics(dir / "diagnostics.csv");
    std::vector<SnapshotEntry> snapshots;
    std::vector<DiagnosticsRecord> records;

    auto write_snapshot = [&](const Field& w, const DiagnosticsRecord& r) {
      const std::string name = snapshot_name(r.step, cfg.output.format);
      if (cfg.output.format == OutputFormat::Csv) {
        write_csv(dir / name, w);
      } else {
        write_raw64(dir / name, w);
      }
      if (cfg.output.emit_marginals) {
        char stem[32];
        std::snprintf(stem, sizeof stem, "marginals_%05zu", r.step);
        write_marginals(dir, stem, w);
      }
      diagnostics.write(r);
      snapshots.push_back({name, r.step, r.t});
      records.push_back(r);
    };

    out << "propagating " << cfg.grid.nx << "x" << cfg.grid.np << " grid, "
        << cfg.potential.describe() << ", order " << plan.order()
        << ", dt = " << plan.dt() << ", " << cfg.propagation.n_steps
        << " steps\n";

    auto result = propagate(std::move(w0), plan, cfg.propagation.n_steps,
                            write_snapshot, cfg.propagation.snapshot_every);
    if (cfg.propagation.snapshot_every == 0) {
      const double t_end =
          static_cast<double>(cfg.propagation.n_steps) * plan.dt();
      write_snapshot(result.final_field,
                     diagnose(result.final_field, plan.potential(),
                              plan.mass(), t_end, cfg.propagation.n_steps));
    }
    write_metadata(dir / "metadata.json", cfg, *grid, snapshots);

    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    out << "wrote " << snapshots.size() << " snapshot(s) to " << dir.string()
        << " in " << seconds << " s\n";
    if (records.size() >= 2) {
      double max_im = 0.0;
      for (const auto& r : records) max_im = std::max(max_im, r.max_im_rel);
      out << "total probability drift "
          << sci(relative_drift(records.front().total_prob,
                                records.back().total_prob))
          << ", purity drift "
          << sci(relative_drift(records.front().purity, records.back().purity))
          << ", max |Im W|/max|W| " << sci(max_im) << '\n';
    }
  } catch (const NumericalError& e) {
    err << "numerical error at step " << e.step() << ": " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

int validate_command(const std::filesystem::path& config_path,
                     std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  CrossValidationReport report;
  try {
    CrossValidationConfig cv;
    cv.grid = make_shared_grid(cfg.grid.nx, cfg.grid.np, cfg.grid.lx,
                               cfg.grid.lp, cfg.grid.hbar);
    cv.potential = cfg.potential;
    cv.state = cfg.state;
    cv.settings = cfg.propagation.settings;
    cv.n_steps = cfg.propagation.n_steps;
    cv.snapshot_every = cfg.propagation.snapshot_every;
    report = cross_validate(cv);
  } catch (const NumericalError& e) {
    err << "numerical error at step " << e.step() << ": " << e.what() << '\n';
    return kExitNumericalError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  char line[128];
  out << "    step            t       l2_rel     linf_rel\n";
  for (const auto& e : report.entries) {
    std::snprintf(line, sizeof line, "%8zu %12.6g %12.4e %12.4e\n", e.step,
                  e.t, e.error.l2_rel, e.error.linf_rel);
    out << line;
  }
  const double linf = report.max_linf_rel();
  const double l2 = report.max_l2_rel();
  const bool ok = linf < cfg.validation.max_linf_rel &&
                  l2 < cfg.validation.max_l2_rel;
  out << (ok ? "PASS" : "FAIL") << ": max linf_rel " << sci(linf)
      << " (limit " << sci(cfg.validation.max_linf_rel) << "), max l2_rel "
      << sci(l2) << " (limit " << sci(cfg.validation.max_l2_rel) << ")\n";
  if (!ok) {
    err << "validation FAILED: Wigner propagation disagrees with the "
           "wavefunction oracle\n";
  }
  return ok ? kExitOk : kExitValidationFailed;
}

}  // namespace wigprop
