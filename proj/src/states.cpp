#include "wigprop/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wigprop/log.hpp"
#include "wigprop/observables.hpp"
#include "wigprop/transforms.hpp"

namespace wigprop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryWarnThreshold = 1e-10;

void normalize_probability(Field& w) {
  const double total = total_probability(w);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::invalid_argument(
        "cannot normalize: total probability is not positive");
  }
  for (auto& v : w.data()) v /= total;
}

void warn_if_clipped(const Field& w, const char* what) {
  const double mass = boundary_mass(w);
  if (mass > kBoundaryWarnThreshold) {
    std::ostringstream os;
    os << what << ": boundary mass " << mass
       << " exceeds 1e-10; the box is too small for this state";
    warn(os.str());
  }
}

void normalize_wavefunction(const Grid& grid, WaveFunction& psi) {
  double norm2 = 0.0;
  for (const auto& v : psi) norm2 += std::norm(v);
  norm2 *= grid.dx();
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& v : psi) v *= scale;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

double laguerre(int n, double u) {
  if (n < 0) throw std::invalid_argument("laguerre: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 - u;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 - u) * curr - static_cast<double>(k) * prev) /
        (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

Field gaussian_wigner(const GridPtr& grid, double x0, double p0,
                      double sigma_x, double sigma_p, bool normalize) {
  if (!std::isfinite(x0) || !std::isfinite(p0)) {
    throw std::invalid_argument("gaussian_wigner: centre must be finite");
  }
  if (!(sigma_x > 0.0) || !(sigma_p > 0.0) || !std::isfinite(sigma_x) ||
      !std::isfinite(sigma_p)) {
    throw std::invalid_argument("gaussian_wigner: widths must be positive");
  }
  Field w(grid, Representation::XP);
  const auto x = grid->x();
  const auto p = grid->p();
  const double ax = 1.0 / (2.0 * sigma_x * sigma_x);
  const double ap = 1.0 / (2.0 * sigma_p * sigma_p);
  for (std::size_t i = 0; i < grid->nx(); ++i) {
    const double dx = x[i] - x0;
    for (std::size_t j = 0; j < grid->np(); ++j) {
      const double dp = p[j] - p0;
      w(i, j) = std::exp(-ax * dx * dx - ap * dp * dp);
    }
  }
  if (normalize) normalize_probability(w);
  warn_if_clipped(w, "gaussian_wigner");
  return w;
}

Field ho_eigenstate_wigner(const GridPtr& grid, int n, double mass,
                           double omega, bool normalize) {
  if (n < 0 || n > kMaxOscillatorLevel) {
    throw std::invalid_argument(
        "ho_eigenstate_wigner: level must be in [0, 30], got " +
        std::to_string(n));
  }
  if (!(mass > 0.0) || !(omega > 0.0)) {
    throw std::invalid_argument(
        "ho_eigenstate_wigner: mass and omega must be positive");
  }
  const double hbar = grid->hbar();
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  const double prefactor = sign / (kPi * hbar);
  Field w(grid, Representation::XP);
  const auto x = grid->x();
  const auto p = grid->p();
  for (std::size_t i = 0; i < grid->nx(); ++i) {
    for (std::size_t j = 0; j < grid->np(); ++j) {
      const double h = p[j] * p[j] / (2.0 * mass) +
                       0.5 * mass * omega * omega * x[i] * x[i];
      const double u = h / (hbar * omega);
      w(i, j) = prefactor * std::exp(-2.0 * u) * laguerre(n, 4.0 * u);
    }
  }
  if (normalize) normalize_probability(w);
  warn_if_clipped(w, "ho_eigenstate_wigner");
  return w;
}

Field wigner_from_wavefunction(const GridPtr& grid,
                               std::span<const Complex> psi) {
  const std::size_t nx = grid->nx();
  const std::size_t np = grid->np();
  if (psi.size() != nx) {
    throw std::invalid_argument("wigner_from_wavefunction: psi has " +
                                std::to_string(psi.size()) +
                                " samples, grid has nx = " +
                                std::to_string(nx));
  }
  double norm2 = 0.0;
  for (const auto& v : psi) norm2 += std::norm(v);
  norm2 *= grid->dx();
  if (!(std::abs(norm2 - 1.0) <= 1e-6)) {
    std::ostringstream os;
    os << "wigner_from_wavefunction: dx*sum|psi|^2 = " << norm2
       << ", expected 1 within 1e-6";
    throw std::invalid_argument(os.str());
  }

  const double hbar = grid->hbar();
  const double dx = grid->dx();
  const double p0 = grid->p()[0];
  // Sampled lags make the result periodic in p with period pi hbar / dx.
  if (2.0 * grid->lp() > std::numbers::pi * hbar / dx * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "wigner_from_wavefunction: p window 2*lp = " << 2.0 * grid->lp()
       << " exceeds the period pi*hbar/dx = " << std::numbers::pi * hbar / dx
       << "; momentum images will overlap";
    warn(os.str());
  }
  // exp(-2 i p_k l dx / hbar) with p_k = p0 + k dp factors as
  // exp(-2 i p0 l dx/hbar) * exp(-i alpha l k); Bluestein's identity
  // lk = (l^2 + k^2 - (k-l)^2)/2 turns the k-dependence into a convolution.
  const double alpha = 2.0 * grid->dp() * dx / hbar;
  const double beta = 2.0 * p0 * dx / hbar;
  const std::size_t max_lag = nx / 2;
  const std::size_t fft_size = next_pow2(max_lag + 1 + np);

  auto chirp = [](double arg) { return std::polar(1.0, arg); };

  ComplexBuffer kernel(fft_size, Complex{});
  for (std::size_t k = 0; k < np; ++k) {
    const double m = static_cast<double>(k);
    kernel[k] = chirp(0.5 * alpha * m * m);
  }
  for (std::size_t l = 1; l <= max_lag; ++l) {
    const double m = static_cast<double>(l);
    kernel[fft_size - l] = chirp(0.5 * alpha * m * m);
  }
  dft_1d(kernel, Direction::Forward);

  std::vector<Complex> pre(max_lag + 1);
  for (std::size_t l = 0; l <= max_lag; ++l) {
    const double m = static_cast<double>(l);
    pre[l] = chirp(-beta * m - 0.5 * alpha * m * m);
  }
  pre[0] *= 0.5;
  std::vector<Complex> post(np);
  for (std::size_t k = 0; k < np; ++k) {
    const double m = static_cast<double>(k);
    post[k] = chirp(-0.5 * alpha * m * m);
  }

  Field w(grid, Representation::XP);
  const double scale = 2.0 * dx / (std::numbers::pi * hbar);
  ComplexBuffer work(fft_size);
  for (std::size_t j = 0; j < nx; ++j) {
    std::fill(work.begin(), work.end(), Complex{});
    const std::size_t reach = std::min(j, nx - 1 - j);
    for (std::size_t l = 0; l <= std::min(reach, max_lag); ++l) {
      work[l] = psi[j + l] * std::conj(psi[j - l]) * pre[l];
    }
    dft_1d(work, Direction::Forward);
    multiply_in_place(work, kernel);
    dft_1d(work, Direction::Inverse);
    for (std::size_t k = 0; k < np; ++k) {
      w(j, k) = scale * (work[k] * post[k]).real();
    }
  }
  return w;
}

WaveFunction gaussian_wavepacket(const Grid& grid, double x0, double p0,
                                 double sigma_x) {
  if (!(sigma_x > 0.0)) {
    throw std::invalid_argument("gaussian_wavepacket: sigma_x must be > 0");
  }
  WaveFunction psi(grid.nx());
  const auto x = grid.x();
  for (std::size_t j = 0; j < grid.nx(); ++j) {
    const double d = x[j] - x0;
    psi[j] = std::exp(-d * d / (4.0 * sigma_x * sigma_x)) *
             std::polar(1.0, p0 * x[j] / grid.hbar());
  }
  normalize_wavefunction(grid, psi);
  return psi;
}

WaveFunction oscillator_eigenfunction(const Grid& grid, int n, double mass,
                                      double omega) {
  if (n < 0 || n > kMaxOscillatorLevel) {
    throw std::invalid_argument(
        "oscillator_eigenfunction: level must be in [0, 30]");
  }
  if (!(mass > 0.0) || !(omega > 0.0)) {
    throw std::invalid_argument(
        "oscillator_eigenfunction: mass and omega must be positive");
  }
  const double hbar = grid.hbar();
  const double k = std::sqrt(mass * omega / hbar);
  const double norm0 = std::pow(mass * omega / (kPi * hbar), 0.25);
  WaveFunction psi(grid.nx());
  const auto x = grid.x();
  for (std::size_t j = 0; j < grid.nx(); ++j) {
    const double xi = k * x[j];
    // Normalized Hermite functions:
    // psi_{m+1} = sqrt(2/(m+1)) xi psi_m - sqrt(m/(m+1)) psi_{m-1}
    double prev = 0.0;
    double curr = norm0 * std::exp(-0.5 * xi * xi);
    for (int m = 0; m < n; ++m) {
      const double next = std::sqrt(2.0 / (m + 1.0)) * xi * curr -
                          std::sqrt(m / (m + 1.0)) * prev;
      prev = curr;
      curr = next;
    }
    psi[j] = curr;
  }
  normalize_wavefunction(grid, psi);
  return psi;
}

Field build_state(const GridPtr& grid, const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::Gaussian:
      return gaussian_wigner(grid, spec.x0, spec.p0, spec.sigma_x,
                             spec.sigma_p, spec.normalize);
    case StateKind::HoEigenstate:
      return ho_eigenstate_wigner(grid, spec.n, spec.mass, spec.omega,
                                  spec.normalize);
    case StateKind::FromWavefunction: {
      auto psi = pure_wavefunction(*grid, spec);
      Field w = wigner_from_wavefunction(grid, *psi);
      if (spec.normalize) normalize_probability(w);
      warn_if_clipped(w, "wigner_from_wavefunction");
      return w;
    }
  }
  throw std::invalid_argument("unknown state kind");
}

std::optional<WaveFunction> pure_wavefunction(const Grid& grid,
                                              const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::Gaussian: {
      const double product = spec.sigma_x * spec.sigma_p;
      const double minimal = 0.5 * grid.hbar();
      if (std::abs(product - minimal) > 1e-9 * minimal) return std::nullopt;
      return gaussian_wavepacket(grid, spec.x0, spec.p0, spec.sigma_x);
    }
    case StateKind::HoEigenstate:
      return oscillator_eigenfunction(grid, spec.n, spec.mass, spec.omega);
    case StateKind::FromWavefunction:
      if (spec.packet == PacketKind::Gaussian) {
        return gaussian_wavepacket(grid, spec.x0, spec.p0, spec.sigma_x);
      }
      return oscillator_eigenfunction(grid, spec.n, spec.mass, spec.omega);
  }
  return std::nullopt;
}

}  // namespace wigprop
