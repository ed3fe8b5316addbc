#include "wigprop/propagator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "wigprop/log.hpp"
#include "wigprop/transforms.hpp"

namespace wigprop {

namespace {

void require_finite_field(const Field& w, std::size_t step, double t) {
  if (!all_finite(w.data())) {
    std::ostringstream os;
    os << "non-finite value in the Wigner function after step " << step
       << " (t = " << t << ")";
    throw NumericalError(os.str(), step);
  }
}

// B(x,theta) -> A(lambda,p), multiply, and back to XP. The x-offset phase
// exp(i lambda lx) introduced by the forward x transform is diagonal in
// lambda, commutes with the kinetic factor and is undone by the inverse.
void kinetic_leg(Field& w, const PropagatorPlan& plan) {
  transform_axis(w, 0, Direction::Forward);
  transform_axis(w, 1, Direction::Inverse);
  multiply_in_place(w.data(), plan.kinetic_factor());
}

void apply_potential(Field& w, const PropagatorPlan& plan, double t) {
  if (plan.time_dependent()) {
    multiply_in_place(w.data(), plan.potential_leg(t));
  } else {
    multiply_in_place(w.data(), plan.potential_factor());
  }
}

bool snapshot_due(std::size_t step, std::size_t n_steps,
                  std::size_t snapshot_every) {
  return snapshot_every > 0 &&
         (step % snapshot_every == 0 || step == n_steps);
}

}  // namespace

ComplexBuffer potential_factor(const Grid& grid, const PotentialSpec& potential,
                               double dt_eff, double t) {
  if (!(dt_eff > 0.0) || !std::isfinite(dt_eff)) {
    throw std::invalid_argument("potential_factor: dt must be positive");
  }
  const double hbar = grid.hbar();
  const auto x = grid.x();
  const auto theta = grid.theta();
  ComplexBuffer out(grid.size());
  for (std::size_t i = 0; i < grid.nx(); ++i) {
    for (std::size_t n = 0; n < grid.np(); ++n) {
      const double s = 0.5 * hbar * theta[n];
      const double diff =
          potential.evaluate(x[i] - s, t) - potential.evaluate(x[i] + s, t);
      if (!std::isfinite(diff)) {
        std::ostringstream os;
        os << "potential " << potential.describe()
           << " is not finite at x = " << x[i] << ", theta = " << theta[n];
        throw NumericalError(os.str(), 0);
      }
      out[i * grid.np() + n] = std::polar(1.0, -dt_eff * diff / hbar);
    }
  }
  return out;
}

ComplexBuffer kinetic_factor(const Grid& grid, double mass, double dt) {
  if (!(mass > 0.0)) throw std::invalid_argument("kinetic_factor: mass <= 0");
  const auto lambda = grid.lambda();
  const auto p = grid.p();
  ComplexBuffer out(grid.size());
  for (std::size_t m = 0; m < grid.nx(); ++m) {
    for (std::size_t k = 0; k < grid.np(); ++k) {
      out[m * grid.np() + k] = std::polar(1.0, -dt * lambda[m] * p[k] / mass);
    }
  }
  return out;
}

PropagatorPlan::PropagatorPlan(GridPtr grid, PotentialSpec potential,
                               PropagationSettings settings)
    : grid_(std::move(grid)),
      potential_(std::move(potential)),
      settings_(settings) {
  if (!grid_) throw std::invalid_argument("PropagatorPlan requires a grid");
  if (settings_.order != 1 && settings_.order != 2) {
    throw std::invalid_argument("propagation order must be 1 or 2");
  }
  if (!(settings_.dt > 0.0) || !std::isfinite(settings_.dt)) {
    throw std::invalid_argument("propagation dt must be positive");
  }
  if (!(settings_.mass > 0.0) || !std::isfinite(settings_.mass)) {
    throw std::invalid_argument("propagation mass must be positive");
  }

  const double leg = settings_.order == 2 ? 0.5 * settings_.dt : settings_.dt;
  potential_factor_ = wigprop::potential_factor(*grid_, potential_, leg, 0.0);
  if (settings_.order == 2 && settings_.merge_half_steps &&
      !time_dependent()) {
    merged_ = wigprop::potential_factor(*grid_, potential_, settings_.dt, 0.0);
  }
  const double kinetic_dt =
      settings_.flip_kinetic_sign ? -settings_.dt : settings_.dt;
  kinetic_factor_ = wigprop::kinetic_factor(*grid_, settings_.mass, kinetic_dt);

  if (kinetic_phase_span() > std::numbers::pi) {
    std::ostringstream os;
    os << "dt*max|lambda*p|/m = " << kinetic_phase_span()
       << " exceeds pi; expect phase-wrapping artifacts at the box edges";
    note(os.str());
  }
}

ComplexBuffer PropagatorPlan::potential_leg(double t) const {
  if (!time_dependent()) return potential_factor_;
  const double leg = settings_.order == 2 ? 0.5 * settings_.dt : settings_.dt;
  return wigprop::potential_factor(*grid_, potential_, leg, t);
}

double PropagatorPlan::kinetic_phase_span() const {
  const double lambda_max = std::numbers::pi / grid_->dx();
  const double p_max = grid_->lp();
  return settings_.dt * lambda_max * p_max / settings_.mass;
}

Field step_first_order(Field w, const PropagatorPlan& plan, double t) {
  w.require(Representation::XP, "step_first_order");
  if (plan.order() != 1) {
    throw std::logic_error("step_first_order called with an order-2 plan");
  }
  transform_axis(w, 1, Direction::Forward);
  apply_potential(w, plan, t);
  kinetic_leg(w, plan);
  transform_axis(w, 0, Direction::Inverse);
  require_finite_field(w, 0, t + plan.dt());
  return w;
}

Field step_second_order(Field w, const PropagatorPlan& plan, double t) {
  w.require(Representation::XP, "step_second_order");
  if (plan.order() != 2) {
    throw std::logic_error("step_second_order called with an order-1 plan");
  }
  transform_axis(w, 1, Direction::Forward);
  apply_potential(w, plan, t);
  kinetic_leg(w, plan);
  transform_axis(w, 1, Direction::Forward);
  transform_axis(w, 0, Direction::Inverse);
  apply_potential(w, plan, t + plan.dt());
  transform_axis(w, 1, Direction::Inverse);
  require_finite_field(w, 0, t + plan.dt());
  return w;
}

Field step(Field w, const PropagatorPlan& plan, double t) {
  return plan.order() == 1 ? step_first_order(std::move(w), plan, t)
                           : step_second_order(std::move(w), plan, t);
}

PropagationResult propagate(Field w0, const PropagatorPlan& plan,
                            std::size_t n_steps, const Observer& observer,
                            std::size_t snapshot_every, double t0) {
  w0.require(Representation::XP, "propagate");
  if (n_steps < 1) throw std::invalid_argument("propagate: n_steps must be >= 1");
  if (!(w0.grid() == plan.grid())) {
    throw std::invalid_argument("propagate: field and plan grids differ");
  }

  const double dt = plan.dt();
  std::vector<DiagnosticsRecord> records;
  auto time_at = [&](std::size_t s) { return t0 + static_cast<double>(s) * dt; };

  auto snapshot = [&](const Field& w, std::size_t s) {
    auto rec = diagnose(w, plan.potential(), plan.mass(), time_at(s), s);
    if (rec.boundary_mass > 1e-10) {
      std::ostringstream os;
      os << "step " << s << ": boundary mass " << rec.boundary_mass
         << " exceeds 1e-10; the state is reaching the box edge";
      warn(os.str());
    }
    if (rec.nyquist_rel > 1e-10) {
      std::ostringstream os;
      os << "step " << s << ": spectral content at the Nyquist bins is "
         << rec.nyquist_rel << " (> 1e-10); realness is no longer guaranteed";
      warn(os.str());
    }
    records.push_back(rec);
    if (observer) observer(w, records.back());
  };

  Field w = std::move(w0);
  if (snapshot_every > 0) snapshot(w, 0);

  const bool merge = plan.order() == 2 && plan.settings().merge_half_steps &&
                     !plan.time_dependent();

  if (!merge) {
    for (std::size_t s = 1; s <= n_steps; ++s) {
      try {
        w = step(std::move(w), plan, time_at(s - 1));
      } catch (const NumericalError& e) {
        std::ostringstream os;
        os << "non-finite value in the Wigner function after step " << s
           << " (t = " << time_at(s) << ")";
        throw NumericalError(os.str(), s);
      }
      if (snapshot_due(s, n_steps, snapshot_every)) snapshot(w, s);
    }
    return {std::move(w), std::move(records)};
  }

  // Merged Strang: between snapshots the state stays in (x, theta) and the
  // two adjacent half potential legs are applied as one full leg.
  bool open = false;
  for (std::size_t s = 1; s <= n_steps; ++s) {
    if (!open) {
      transform_axis(w, 1, Direction::Forward);
      multiply_in_place(w.data(), plan.potential_factor());
      open = true;
    }
    kinetic_leg(w, plan);
    transform_axis(w, 1, Direction::Forward);
    transform_axis(w, 0, Direction::Inverse);
    const bool close = s == n_steps || snapshot_due(s, n_steps, snapshot_every);
    if (close) {
      multiply_in_place(w.data(), plan.potential_factor());
      transform_axis(w, 1, Direction::Inverse);
      open = false;
    } else {
      multiply_in_place(w.data(), plan.merged_potential_factor());
    }
    require_finite_field(w, s, time_at(s));
    if (snapshot_due(s, n_steps, snapshot_every)) snapshot(w, s);
  }
  return {std::move(w), std::move(records)};
}

}  // namespace wigprop
