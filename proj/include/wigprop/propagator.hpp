#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wigprop/field.hpp"
#include "wigprop/observables.hpp"
#include "wigprop/potentials.hpp"

namespace wigprop {

/// A step produced NaN or Inf. step is the 1-based index of the failing
/// step within propagate(), 0 when raised by a bare step call.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, std::size_t step)
      : std::runtime_error(what), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

struct PropagationSettings {
  double mass = 1.0;
  double dt = 0.01;
  int order = 1;
  /// Fuse the trailing half potential step of one Strang step with the
  /// leading half of the next. Only used for time-independent potentials
  /// and never across a snapshot.
  bool merge_half_steps = false;
  /// Negative control: applies exp(+i dt lambda p / m) instead of
  /// exp(-i dt lambda p / m). Never set this for physics runs.
  bool flip_kinetic_sign = false;
};

/// exp(-i dt_eff [U(x - hbar theta/2, t) - U(x + hbar theta/2, t)] / hbar)
/// over (x, wrapped theta). Throws NumericalError naming x and theta when
/// the potential is not finite at a shifted argument.
ComplexBuffer potential_factor(const Grid& grid, const PotentialSpec& potential,
                               double dt_eff, double t);

/// exp(-i dt lambda p / mass) over (wrapped lambda, p).
ComplexBuffer kinetic_factor(const Grid& grid, double mass, double dt);

/// Precomputed phase factors for split-operator stepping of the Wigner
/// function. For order 2 the stored potential factor is the half step.
///
/// Immutable after construction. For a time-independent potential it can
/// be shared across concurrent propagations on the same grid.
class PropagatorPlan {
 public:
  PropagatorPlan(GridPtr grid, PotentialSpec potential,
                 PropagationSettings settings);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const PotentialSpec& potential() const { return potential_; }
  const PropagationSettings& settings() const { return settings_; }
  double dt() const { return settings_.dt; }
  double mass() const { return settings_.mass; }
  int order() const { return settings_.order; }
  bool time_dependent() const { return potential_.is_time_dependent(); }

  /// Factor for order 1, half-step factor for order 2, evaluated at t = 0.
  const ComplexBuffer& potential_factor() const { return potential_factor_; }
  const ComplexBuffer& kinetic_factor() const { return kinetic_factor_; }

  /// Potential leg factor valid at time t: the cached one when the
  /// potential is static, a freshly built one otherwise.
  ComplexBuffer potential_leg(double t) const;
  /// Full-step potential factor (used when merging half steps).
  const ComplexBuffer& merged_potential_factor() const { return merged_; }

  /// dt * max|lambda p| / m. Values above pi wrap the kinetic phase
  /// between neighbouring grid cells.
  double kinetic_phase_span() const;

 private:
  GridPtr grid_;
  PotentialSpec potential_;
  PropagationSettings settings_;
  ComplexBuffer potential_factor_;
  ComplexBuffer kinetic_factor_;
  ComplexBuffer merged_;
};

/// One Lie step: potential in (x, theta), then kinetic in (lambda, p).
/// Input and output are in XP.
Field step_first_order(Field w, const PropagatorPlan& plan, double t);

/// One Strang step: half potential at t, kinetic, half potential at t + dt.
Field step_second_order(Field w, const PropagatorPlan& plan, double t);

/// Dispatches on plan.order().
Field step(Field w, const PropagatorPlan& plan, double t);

/// Called at every snapshot with the XP field and its diagnostics.
using Observer =
    std::function<void(const Field& w, const DiagnosticsRecord& record)>;

struct PropagationResult {
  Field final_field;
  std::vector<DiagnosticsRecord> records;
};

/// Advances w0 by n_steps steps of plan.dt(), starting at t0.
///
/// With snapshot_every > 0 a snapshot is taken at step 0, at every multiple
/// of snapshot_every, and at the last step; each snapshot produces a
/// DiagnosticsRecord and an observer call. snapshot_every == 0 disables
/// snapshots entirely.
///
/// Throws NumericalError carrying the failing step on NaN/Inf.
PropagationResult propagate(Field w0, const PropagatorPlan& plan,
                            std::size_t n_steps, const Observer& observer = {},
                            std::size_t snapshot_every = 0, double t0 = 0.0);

}  // namespace wigprop
