#pragma once

#include <cstddef>
#include <vector>

#include "wigprop/field.hpp"
#include "wigprop/potentials.hpp"
#include "wigprop/propagator.hpp"
#include "wigprop/states.hpp"

namespace wigprop {

/// One split-step of the Schroedinger equation on the grid's x axis, with
/// momenta hbar * lambda. Same ordering conventions as the Wigner
/// propagator: order 1 applies the potential then the kinetic factor;
/// order 2 uses half potential steps at t and t + dt around a full
/// kinetic step.
WaveFunction schrodinger_step(WaveFunction psi, const Grid& grid,
                              const PotentialSpec& potential, double mass,
                              double dt, int order, double t);

struct FieldComparison {
  /// ||a - b||_2 / ||b||_2
  double l2_rel = 0.0;
  /// max|a - b| / max|b|
  double linf_rel = 0.0;
};

FieldComparison compare_fields(const Field& a, const Field& b);

struct CrossValidationConfig {
  GridPtr grid;
  PotentialSpec potential = PotentialSpec::free();
  StateSpec state;
  PropagationSettings settings;
  std::size_t n_steps = 1;
  std::size_t snapshot_every = 0;
};

struct CrossValidationEntry {
  std::size_t step = 0;
  double t = 0.0;
  FieldComparison error;
};

struct CrossValidationReport {
  std::vector<CrossValidationEntry> entries;

  double max_l2_rel() const;
  double max_linf_rel() const;
};

/// Propagates the state once as a Wigner function and once as a
/// wavefunction, Wigner-transforms the wavefunction at each snapshot
/// (step 0, multiples of snapshot_every, last step) and compares.
/// The state is normalized for the comparison regardless of
/// state.normalize. Throws std::invalid_argument for mixed states.
CrossValidationReport cross_validate(const CrossValidationConfig& config);

}  // namespace wigprop
