#include "wigprop/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wigprop/transforms.hpp"

namespace wigprop {

namespace {

void apply_potential_phase(WaveFunction& psi, const Grid& grid,
                           const PotentialSpec& potential, double dt,
                           double t) {
  const auto x = grid.x();
  for (std::size_t j = 0; j < psi.size(); ++j) {
    psi[j] *= std::polar(1.0, -dt * potential.evaluate(x[j], t) / grid.hbar());
  }
}

void apply_kinetic_phase(WaveFunction& psi, const Grid& grid, double mass,
                         double dt) {
  const auto k = grid.lambda();
  const double hbar = grid.hbar();
  ComplexBuffer work(psi.begin(), psi.end());
  dft_1d(work, Direction::Forward);
  for (std::size_t m = 0; m < work.size(); ++m) {
    work[m] *= std::polar(1.0, -dt * hbar * k[m] * k[m] / (2.0 * mass));
  }
  dft_1d(work, Direction::Inverse);
  std::copy(work.begin(), work.end(), psi.begin());
}

}  // namespace

WaveFunction schrodinger_step(WaveFunction psi, const Grid& grid,
                              const PotentialSpec& potential, double mass,
                              double dt, int order, double t) {
  if (psi.size() != grid.nx()) {
    throw std::invalid_argument("schrodinger_step: psi length != nx");
  }
  if (order == 1) {
    apply_potential_phase(psi, grid, potential, dt, t);
    apply_kinetic_phase(psi, grid, mass, dt);
  } else if (order == 2) {
    apply_potential_phase(psi, grid, potential, 0.5 * dt, t);
    apply_kinetic_phase(psi, grid, mass, dt);
    apply_potential_phase(psi, grid, potential, 0.5 * dt, t + dt);
  } else {
    throw std::invalid_argument("schrodinger_step: order must be 1 or 2");
  }
  for (const auto& v : psi) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError("non-finite wavefunction after oracle step", 0);
    }
  }
  return psi;
}

FieldComparison compare_fields(const Field& a, const Field& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("compare_fields: shape mismatch");
  }
  a.require(b.rep(), "compare_fields");
  double diff2 = 0.0;
  double ref2 = 0.0;
  double diff_max = 0.0;
  double ref_max = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    const double d = std::abs(da[i] - db[i]);
    const double r = std::abs(db[i]);
    diff2 += d * d;
    ref2 += r * r;
    diff_max = std::max(diff_max, d);
    ref_max = std::max(ref_max, r);
  }
  FieldComparison out;
  out.l2_rel = ref2 > 0.0 ? std::sqrt(diff2 / ref2) : std::sqrt(diff2);
  out.linf_rel = ref_max > 0.0 ? diff_max / ref_max : diff_max;
  return out;
}

double CrossValidationReport::max_l2_rel() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.error.l2_rel);
  return m;
}

double CrossValidationReport::max_linf_rel() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.error.linf_rel);
  return m;
}

CrossValidationReport cross_validate(const CrossValidationConfig& config) {
  if (!config.grid) throw std::invalid_argument("cross_validate: no grid");
  const Grid& grid = *config.grid;

  StateSpec state = config.state;
  state.normalize = true;
  auto psi_opt = pure_wavefunction(grid, state);
  if (!psi_opt) {
    throw std::invalid_argument(
        "cross_validate: the state is not pure (needs sigma_x * sigma_p = "
        "hbar / 2 for Gaussians)");
  }
  WaveFunction psi = std::move(*psi_opt);
  Field w = build_state(config.grid, state);

  const PropagatorPlan plan(config.grid, config.potential, config.settings);
  const auto& s = config.settings;
  const std::size_t every =
      config.snapshot_every > 0 ? config.snapshot_every : config.n_steps;

  CrossValidationReport report;
  auto record = [&](std::size_t step_index) {
    const Field reference = wigner_from_wavefunction(config.grid, psi);
    report.entries.push_back({step_index,
                              static_cast<double>(step_index) * s.dt,
                              compare_fields(w, reference)});
  };

  record(0);
  for (std::size_t k = 1; k <= config.n_steps; ++k) {
    const double t = static_cast<double>(k - 1) * s.dt;
    w = step(std::move(w), plan, t);
    psi = schrodinger_step(std::move(psi), grid, config.potential, s.mass,
                           s.dt, s.order, t);
    if (k % every == 0 || k == config.n_steps) record(k);
  }
  return report;
}

}  // namespace wigprop
