#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wigprop/field.hpp"

namespace wigprop {

using WaveFunction = std::vector<Complex>;

/// Largest harmonic-oscillator level accepted by the eigenstate builders.
inline constexpr int kMaxOscillatorLevel = 30;

/// W(x,p) proportional to exp(-(x-x0)^2/(2 sx^2) - (p-p0)^2/(2 sp^2)).
/// Unnormalized the peak value is 1; normalized, dx*dp*sum(W) = 1.
/// Warns through the log sink when the boundary cells carry more than 1e-10
/// of probability.
Field gaussian_wigner(const GridPtr& grid, double x0, double p0,
                      double sigma_x, double sigma_p, bool normalize = true);

/// Wigner function of the n-th harmonic-oscillator eigenstate,
///   W_n = (-1)^n / (pi hbar) * exp(-2H/(hbar w)) * L_n(4H/(hbar w)),
/// with H = p^2/(2m) + m w^2 x^2 / 2. Throws for n outside [0, 30].
Field ho_eigenstate_wigner(const GridPtr& grid, int n, double mass,
                           double omega, bool normalize = true);

/// Discrete Wigner transform of a wavefunction sampled on the grid's x axis:
///   W(x_j, p_k) = (dx / (pi hbar)) sum_l psi_{j+l} conj(psi_{j-l})
///                 exp(-2 i p_k l dx / hbar),
/// psi taken as zero outside the box. The sum over l is evaluated for all
/// p_k at once with a chirp-z transform, so the p grid need not be
/// commensurate with dx. The result is exactly real.
///
/// Throws std::invalid_argument on a length mismatch or when
/// dx * sum |psi|^2 differs from 1 by more than 1e-6.
Field wigner_from_wavefunction(const GridPtr& grid,
                               std::span<const Complex> psi);

/// Normalized Gaussian packet with |psi|^2 of standard deviation sigma_x,
/// centered at x0 with mean momentum p0.
WaveFunction gaussian_wavepacket(const Grid& grid, double x0, double p0,
                                 double sigma_x);

/// Normalized harmonic-oscillator eigenfunction psi_n sampled on the x axis.
WaveFunction oscillator_eigenfunction(const Grid& grid, int n, double mass,
                                      double omega);

enum class StateKind { Gaussian, HoEigenstate, FromWavefunction };
/// Wavefunction family used by StateKind::FromWavefunction.
enum class PacketKind { Gaussian, Hermite };

/// Declarative initial state. Gaussian uses x0, p0, sigma_x, sigma_p;
/// HoEigenstate uses n, mass, omega; FromWavefunction builds the packet
/// (Gaussian: x0, p0, sigma_x; Hermite: n, mass, omega) and Wigner
/// transforms it numerically.
struct StateSpec {
  StateKind kind = StateKind::Gaussian;
  PacketKind packet = PacketKind::Gaussian;
  double x0 = 0.0;
  double p0 = 0.0;
  double sigma_x = 1.0;
  double sigma_p = 1.0;
  int n = 0;
  double mass = 1.0;
  double omega = 1.0;
  bool normalize = true;
};

Field build_state(const GridPtr& grid, const StateSpec& spec);

/// The wavefunction behind a pure state spec, or nullopt when the spec is
/// not a pure state (a Gaussian with sigma_x * sigma_p != hbar / 2).
std::optional<WaveFunction> pure_wavefunction(const Grid& grid,
                                              const StateSpec& spec);

/// Laguerre polynomial L_n(u) by the three-term recurrence.
double laguerre(int n, double u);

}  // namespace wigprop
