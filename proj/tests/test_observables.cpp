#include <doctest.h>

#include <cmath>

#include "wigprop/observables.hpp"
#include "wigprop/states.hpp"
#include "wigprop/transforms.hpp"

using namespace wigprop;

namespace {
const double kSqrtHalf = std::sqrt(0.5);
}

TEST_CASE("probability, purity and means of a normalized Gaussian") {
  auto g = make_shared_grid(128, 128, 8.0, 8.0, 1.0);
  const Field w = gaussian_wigner(g, 2.0, 0.0, kSqrtHalf, kSqrtHalf);
  CHECK(total_probability(w) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(purity(w) - 1.0) < 1e-6);
  CHECK(std::abs(mean_x(w) - 2.0) < 1e-10);
  CHECK(std::abs(mean_p(w)) < 1e-10);
  CHECK(std::abs(expectation(w, [](double x, double) { return x; }) - 2.0) <
        1e-10);
  // <x^2> - <x>^2 = sigma_x^2
  const double x2 = expectation(w, [](double x, double) { return x * x; });
  CHECK(x2 - 4.0 == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("energy of oscillator eigenstates is (n + 1/2) hbar omega") {
  auto g = make_shared_grid(128, 128, 10.0, 10.0, 1.0);
  const auto u = PotentialSpec::harmonic(1.0, 1.0);
  for (int n = 0; n < 4; ++n) {
    const Field w = ho_eigenstate_wigner(g, n, 1.0, 1.0);
    CHECK(energy(w, u, 1.0, 0.0) == doctest::Approx(n + 0.5).epsilon(1e-10));
  }
}

TEST_CASE("negativity volume of the first excited state") {
  // Closed form: dx dp sum|W| - 1 = 2 * (2 e^{-1/2} - 1) for n = 1.
  // |W| has a kink on the nodal circle, so the sum is only O(dx^2) accurate.
  auto g = make_shared_grid(256, 256, 8.0, 8.0, 1.0);
  const Field w = ho_eigenstate_wigner(g, 1, 1.0, 1.0);
  const double expected = 4.0 / std::sqrt(std::exp(1.0)) - 2.0;
  CHECK(negativity_volume(w) > 0.1);
  CHECK(negativity_volume(w) == doctest::Approx(expected).epsilon(1e-3));

  const Field gauss = gaussian_wigner(g, 0.0, 0.0, kSqrtHalf, kSqrtHalf);
  CHECK(std::abs(negativity_volume(gauss)) < 1e-10);
}

TEST_CASE("marginals of the reference Gaussian") {
  auto g = make_shared_grid(128, 128, 8.0, 8.0, 1.0);
  const Field w = gaussian_wigner(g, 2.0, 0.0, kSqrtHalf, kSqrtHalf);
  const auto m = marginals(w);
  const auto peak = std::max_element(m.rho_x.begin(), m.rho_x.end());
  CHECK(g->x()[static_cast<std::size_t>(peak - m.rho_x.begin())] == 2.0);
  for (double v : m.rho_x) CHECK(v >= -1e-12);
  for (double v : m.rho_p) CHECK(v >= -1e-12);
  double sx = 0.0;
  for (double v : m.rho_x) sx += v;
  CHECK(sx * g->dx() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("marginals of non-classical states stay non-negative") {
  auto g = make_shared_grid(128, 128, 10.0, 10.0, 1.0);
  for (int n = 1; n < 6; ++n) {
    const auto m = marginals(ho_eigenstate_wigner(g, n, 1.0, 1.0));
    for (double v : m.rho_x) CHECK(v >= -1e-10);
    for (double v : m.rho_p) CHECK(v >= -1e-10);
  }
}

TEST_CASE("purity stays at or below one for constructed pure states") {
  auto g = make_shared_grid(128, 128, 9.0, 9.0, 1.0);
  for (int n = 0; n < 5; ++n) {
    CHECK(purity(ho_eigenstate_wigner(g, n, 1.0, 1.0)) <= 1.0 + 1e-6);
  }
  CHECK(purity(wigner_from_wavefunction(
            g, gaussian_wavepacket(*g, 1.0, 0.5, 0.9))) <= 1.0 + 1e-6);
}

TEST_CASE("diagnostics record") {
  auto g = make_shared_grid(64, 64, 8.0, 8.0, 1.0);
  const Field w = gaussian_wigner(g, 1.0, 0.5, kSqrtHalf, kSqrtHalf, false);
  const auto u = PotentialSpec::harmonic(1.0, 1.0);
  const auto r = diagnose(w, u, 1.0, 0.25, 7);
  CHECK(r.step == 7);
  CHECK(r.t == 0.25);
  CHECK(r.total_prob == doctest::Approx(std::numbers::pi).epsilon(1e-10));
  // Per-particle values regardless of normalization.
  CHECK(r.purity == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.mean_x == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.mean_p == doctest::Approx(0.5).epsilon(1e-10));
  // <p^2/2 + x^2/2> = (0.25 + 0.25 + 0.25 + 1) / 2
  CHECK(r.energy == doctest::Approx(0.5 * (0.5 + 0.25 + 0.5 + 1.0)).epsilon(1e-10));
  CHECK(r.min_w >= 0.0);
  CHECK(r.max_im_rel == 0.0);
  CHECK(r.boundary_mass < 1e-10);
  CHECK(r.nyquist_rel < 1e-10);
}

TEST_CASE("nyquist content flags under-resolved fields") {
  auto g = make_shared_grid(32, 32, 4.0, 4.0, 1.0);
  Field w(g, Representation::XP);
  for (std::size_t i = 0; i < 32; ++i) {
    for (std::size_t k = 0; k < 32; ++k) w(i, k) = (k % 2 == 0) ? 1.0 : -1.0;
  }
  CHECK(nyquist_content(w) == doctest::Approx(1.0));
}

TEST_CASE("observables require the XP representation") {
  auto g = make_shared_grid(8, 8, 2.0, 2.0, 1.0);
  Field b(g, Representation::XTheta);
  CHECK_THROWS_AS(total_probability(b), std::logic_error);
  CHECK_THROWS_AS(purity(b), std::logic_error);
  CHECK_THROWS_AS(marginals(b), std::logic_error);
  CHECK_THROWS_AS(negativity_volume(b), std::logic_error);
}
