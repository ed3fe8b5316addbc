#pragma once

#include <functional>
#include <vector>

#include "wigprop/field.hpp"
#include "wigprop/potentials.hpp"

namespace wigprop {

/// Per-snapshot scalars. All sums are plain Riemann sums weighted by dx*dp
/// over Re W; the imaginary part only enters max_im_rel. purity, mean_x,
/// mean_p and energy are divided by total_prob (purity by its square) so
/// that unnormalized states report per-particle values.
struct DiagnosticsRecord {
  std::size_t step = 0;
  double t = 0.0;
  double total_prob = 0.0;
  double purity = 0.0;
  double mean_x = 0.0;
  double mean_p = 0.0;
  double energy = 0.0;
  double min_w = 0.0;
  /// max |Im W| / max |W|
  double max_im_rel = 0.0;
  double boundary_mass = 0.0;
  /// Largest magnitude in the Nyquist column of B or Nyquist row of A,
  /// relative to the largest magnitude of that representation.
  double nyquist_rel = 0.0;
};

struct Marginals {
  std::vector<double> rho_x;
  std::vector<double> rho_p;
};

// All functions below require rep() == XP and throw std::logic_error
// otherwise.

double total_probability(const Field& w);
/// 2 pi hbar dx dp sum (Re W)^2; equals Tr rho^2.
double purity(const Field& w);
double expectation(const Field& w,
                   const std::function<double(double, double)>& f);
double mean_x(const Field& w);
double mean_p(const Field& w);
/// <p^2/(2m) + U(x,t)>
double energy(const Field& w, const PotentialSpec& potential, double mass,
              double t);
Marginals marginals(const Field& w);
/// dx dp sum |Re W| - total_probability, i.e. twice the negative volume.
double negativity_volume(const Field& w);
double min_value(const Field& w);
double max_imag_relative(const Field& w);
/// dx*dp * sum |W| over the outermost rows and columns.
double boundary_mass(const Field& w);
/// Spectral content at the Nyquist frequencies of both axes (see
/// DiagnosticsRecord::nyquist_rel). Costs two axis transforms.
double nyquist_content(const Field& w);

DiagnosticsRecord diagnose(const Field& w, const PotentialSpec& potential,
                           double mass, double t, std::size_t step = 0);

}  // namespace wigprop
