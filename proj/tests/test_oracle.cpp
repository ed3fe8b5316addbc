#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support/analytic.hpp"
#include "wigprop/log.hpp"
#include "wigprop/oracle.hpp"

using namespace wigprop;
using std::numbers::pi;

namespace {

double norm(const WaveFunction& psi, double dx) {
  double s = 0.0;
  for (const auto& v : psi) s += std::norm(v);
  return s * dx;
}

double variance_x(const WaveFunction& psi, const Grid& g) {
  double n = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t j = 0; j < g.nx(); ++j) {
    const double rho = std::norm(psi[j]);
    n += rho;
    m1 += rho * g.x()[j];
    m2 += rho * g.x()[j] * g.x()[j];
  }
  m1 /= n;
  return m2 / n - m1 * m1;
}

Complex overlap(const WaveFunction& a, const WaveFunction& b, double dx) {
  Complex s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::conj(a[j]) * b[j];
  return s * dx;
}

}  // namespace

TEST_CASE("schroedinger steps conserve the norm") {
  const Grid g = Grid::make(256, 64, 10.0, 6.0, 1.0);
  WaveFunction psi = gaussian_wavepacket(g, 1.0, 0.5, 0.8);
  for (int order : {1, 2}) {
    WaveFunction cur = psi;
    for (int s = 0; s < 200; ++s) {
      cur = schrodinger_step(cur, g, PotentialSpec::quartic(0.1), 1.0, 0.01,
                             order, s * 0.01);
    }
    CHECK(norm(cur, g.dx()) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("free packet spreads as sigma0^2 + (hbar t / 2 m sigma0)^2") {
  const Grid g = Grid::make(1024, 64, 30.0, 6.0, 1.0);
  const double sigma0 = 1.0, mass = 1.0, dt = 0.02;
  WaveFunction psi = gaussian_wavepacket(g, 0.0, 0.0, sigma0);
  for (int s = 0; s < 100; ++s) {
    psi = schrodinger_step(psi, g, PotentialSpec::free(), mass, dt, 2, s * dt);
  }
  const double t = 100 * dt;
  const double spread = t / (2.0 * mass * sigma0);
  CHECK(variance_x(psi, g) ==
        doctest::Approx(sigma0 * sigma0 + spread * spread).epsilon(1e-6));
}

TEST_CASE("oscillator ground state only acquires the phase exp(-i t / 2)") {
  const Grid g = Grid::make(256, 64, 10.0, 6.0, 1.0);
  const WaveFunction psi0 = oscillator_eigenfunction(g, 0, 1.0, 1.0);
  const double t = 1.0;
  auto run = [&](double dt) {
    WaveFunction psi = psi0;
    const int n = static_cast<int>(std::lround(t / dt));
    for (int s = 0; s < n; ++s) {
      psi = schrodinger_step(psi, g, PotentialSpec::harmonic(1.0, 1.0), 1.0,
                             dt, 2, s * dt);
    }
    return std::abs(overlap(psi0, psi, g.dx()) - std::polar(1.0, -0.5 * t));
  };
  const double e1 = run(0.01), e2 = run(0.005);
  CHECK(e1 < 1e-4);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("compare_fields") {
  auto g = make_shared_grid(4, 4, 1.0, 1.0, 1.0);
  Field a(g, Representation::XP), b(g, Representation::XP);
  for (auto& v : b.data()) v = 2.0;
  a = b;
  CHECK(compare_fields(a, b).l2_rel == 0.0);
  CHECK(compare_fields(a, b).linf_rel == 0.0);
  a(1, 2) = 3.0;
  const auto c = compare_fields(a, b);
  CHECK(c.linf_rel == doctest::Approx(0.5));
  CHECK(c.l2_rel == doctest::Approx(1.0 / std::sqrt(16.0 * 4.0)));
  CHECK_THROWS_AS(compare_fields(a, Field(g, Representation::XTheta)),
                  std::logic_error);
}

TEST_CASE("free-particle cross-validation agrees to round-off") {
  CrossValidationConfig cfg;
  // The spreading packet has to stay clear of the box edge: W of a
  // periodic wavefunction is not the periodic image sum of W.
  cfg.grid = make_shared_grid(1024, 128, 50.0, 6.0, 1.0);
  cfg.potential = PotentialSpec::free();
  cfg.state.x0 = -1.0;
  cfg.state.p0 = 0.5;
  cfg.state.sigma_x = std::sqrt(0.5);
  cfg.state.sigma_p = std::sqrt(0.5);
  cfg.settings.dt = 0.05;
  cfg.settings.order = 1;
  cfg.n_steps = 100;
  cfg.snapshot_every = 25;
  const auto report = cross_validate(cfg);
  CHECK(report.entries.size() == 5);
  CHECK(report.max_linf_rel() < 1e-12);
}

TEST_CASE("harmonic cross-validation agrees with the analytic rotation") {
  CrossValidationConfig cfg;
  auto g = make_shared_grid(128, 128, 8.0, 8.0, 1.0);
  cfg.grid = g;
  cfg.potential = PotentialSpec::harmonic(1.0, 1.0);
  cfg.state.x0 = 2.0;
  cfg.state.sigma_x = std::sqrt(0.5);
  cfg.state.sigma_p = std::sqrt(0.5);
  cfg.settings.dt = 2 * pi / 1000;
  cfg.settings.order = 2;
  cfg.n_steps = 1000;
  cfg.snapshot_every = 250;
  const auto report = cross_validate(cfg);
  CHECK(report.max_l2_rel() < 1e-3);

  Field exact = analytic::harmonic_rotation(g, 2.0, 0.0, std::sqrt(0.5),
                                            std::sqrt(0.5), 1.0, 1.0, 2 * pi);
  for (auto& v : exact.data()) v /= pi;
  const Field w0 = gaussian_wigner(g, 2.0, 0.0, std::sqrt(0.5), std::sqrt(0.5));
  CHECK(compare_fields(w0, exact).linf_rel < 1e-12);
}

TEST_CASE("cross-validation rejects mixed states") {
  CrossValidationConfig cfg;
  cfg.grid = make_shared_grid(32, 32, 6.0, 6.0, 1.0);
  cfg.state.sigma_x = 1.0;
  cfg.state.sigma_p = 1.0;
  CHECK_THROWS_AS(cross_validate(cfg), std::invalid_argument);
}
