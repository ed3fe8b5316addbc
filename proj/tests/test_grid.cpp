#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "support/oracles.hpp"
#include "wigprop/grid.hpp"
#include "wigprop/transforms.hpp"

using namespace wigprop;
using std::numbers::pi;

TEST_CASE("make_grid reproduces the reference 512x512 sampling") {
  const Grid g = Grid::make(512, 512, 9.0, 25.0, 1.0);
  CHECK(g.dx() == 0.03515625);
  CHECK(g.x()[0] == -9.0);
  CHECK(g.x()[511] == 8.96484375);
  CHECK(g.x()[511] == doctest::Approx(9.0 * (1.0 - 2.0 / 512)).epsilon(1e-15));
  CHECK(g.p()[0] == -25.0);
  CHECK(g.dp() == doctest::Approx(50.0 / 512).epsilon(1e-15));

  // Same samples as numpy.linspace(-9, 9*(1-2/512), 512).
  const auto ref = oracle::linspace(-9.0, 9.0 * (1.0 - 2.0 / 512), 512);
  for (std::size_t j = 0; j < 512; ++j) {
    CHECK(g.x()[j] == doctest::Approx(ref[j]).epsilon(1e-14));
  }
}

TEST_CASE("smallest even grid") {
  const Grid g = Grid::make(2, 2, 1.0, 1.0, 1.0);
  CHECK(g.x()[0] == -1.0);
  CHECK(g.x()[1] == 0.0);
  CHECK(g.p()[0] == -1.0);
  CHECK(g.p()[1] == 0.0);
  CHECK(g.theta()[0] == 0.0);
  CHECK(g.theta()[1] == doctest::Approx(-pi));
}

TEST_CASE("wrapped lambda on a 4x4 grid") {
  const Grid g = Grid::make(4, 4, 2.0, 2.0, 1.0);
  REQUIRE(g.dx() == 1.0);
  const double expected[] = {0.0, 1.5707963, -3.1415927, -1.5707963};
  for (std::size_t m = 0; m < 4; ++m) {
    CHECK(g.lambda()[m] == doctest::Approx(expected[m]).epsilon(1e-7));
  }
}

TEST_CASE("make_grid rejects odd, zero and non-positive inputs") {
  CHECK_THROWS_AS(Grid::make(0, 4, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(3, 4, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(4, 5, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(4, 4, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(4, 4, 1, -1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(4, 4, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Grid::make(4, 4, NAN, 1, 1), std::invalid_argument);
}

TEST_CASE("wrapped_frequencies definition") {
  auto a = wrapped_frequencies(4, 1.0);
  CHECK(a[0] == 0.0);
  CHECK(a[1] == doctest::Approx(pi / 2));
  CHECK(a[2] == doctest::Approx(-pi));
  CHECK(a[3] == doctest::Approx(-pi / 2));

  auto b = wrapped_frequencies(2, 0.5);
  CHECK(b[0] == 0.0);
  CHECK(b[1] == doctest::Approx(-2 * pi));

  CHECK_THROWS_AS(wrapped_frequencies(5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(wrapped_frequencies(4, 0.0), std::invalid_argument);
}

TEST_CASE("wrapped_frequencies bins match a brute-force DFT of pure tones") {
  const std::size_t n = 8;
  const double d = 0.25;
  const auto freq = wrapped_frequencies(n, d);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<oracle::cd> tone(n);
    for (std::size_t j = 0; j < n; ++j) {
      tone[j] = std::exp(oracle::cd(0.0, freq[m] * static_cast<double>(j) * d));
    }
    const auto spectrum = oracle::naive_dft(tone, -1);
    for (std::size_t k = 0; k < n; ++k) {
      const double expected = k == m ? static_cast<double>(n) : 0.0;
      CHECK(std::abs(spectrum[k]) == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("frequency vectors: conjugate pairing, spacing and coverage") {
  for (std::size_t n : {2u, 4u, 6u, 16u, 128u}) {
    const double d = 0.37;
    const auto f = wrapped_frequencies(n, d);
    const double step = 2 * pi / (static_cast<double>(n) * d);
    for (std::size_t m = 1; m < n; ++m) {
      if (m == n / 2) continue;
      CHECK(f[n - m] == doctest::Approx(-f[m]));
    }
    // Each multiple of the step in [-pi/d, pi/d) exactly once.
    std::vector<int> seen(n, 0);
    for (double v : f) {
      const long long k = std::llround(v / step);
      CHECK(v == doctest::Approx(static_cast<double>(k) * step));
      CHECK(k >= -static_cast<long long>(n / 2));
      CHECK(k < static_cast<long long>(n / 2));
      seen[static_cast<std::size_t>(k + static_cast<long long>(n / 2))]++;
    }
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("grid invariants") {
  const Grid g = Grid::make(64, 32, 3.5, 7.25, 0.5);
  CHECK(g.dx() * (g.lambda()[1] - g.lambda()[0]) ==
        doctest::Approx(2 * pi / 64));
  CHECK(g.dp() * (g.theta()[1] - g.theta()[0]) == doctest::Approx(2 * pi / 32));
  CHECK(g.x().back() == doctest::Approx(3.5 * (1 - 2.0 / 64)));
  for (std::size_t j = 1; j < g.nx(); ++j) CHECK(g.x()[j] > g.x()[j - 1]);
  for (std::size_t j = 1; j < g.np(); ++j) CHECK(g.p()[j] > g.p()[j - 1]);

  const Grid h = Grid::make(64, 32, 3.5, 7.25, 0.5);
  CHECK(std::equal(g.x().begin(), g.x().end(), h.x().begin()));
  CHECK(std::equal(g.theta().begin(), g.theta().end(), h.theta().begin()));
  CHECK(g == h);
}
