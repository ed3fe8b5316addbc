#include "wigprop/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wigprop {

namespace {

void require_even_count(std::size_t n, const char* name) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument(std::string(name) +
                                " must be an even count >= 2, got " +
                                std::to_string(n));
  }
}

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw std::invalid_argument(std::string(name) +
                                " must be finite and positive");
  }
}

std::vector<double> uniform_samples(std::size_t n, double half_width,
                                    double step) {
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    v[j] = -half_width + static_cast<double>(j) * step;
  }
  return v;
}

}  // namespace

std::vector<double> wrapped_frequencies(std::size_t n, double d) {
  require_even_count(n, "frequency count");
  require_positive(d, "sample spacing");
  const double scale =
      2.0 * std::numbers::pi / (static_cast<double>(n) * d);
  std::vector<double> out(n);
  const auto half = static_cast<std::ptrdiff_t>(n / 2);
  for (std::size_t m = 0; m < n; ++m) {
    auto signed_index = static_cast<std::ptrdiff_t>(m);
    if (signed_index >= half) signed_index -= static_cast<std::ptrdiff_t>(n);
    out[m] = scale * static_cast<double>(signed_index);
  }
  return out;
}

Grid Grid::make(std::size_t nx, std::size_t np, double lx, double lp,
                double hbar) {
  require_even_count(nx, "grid.nx");
  require_even_count(np, "grid.np");
  require_positive(lx, "grid.lx");
  require_positive(lp, "grid.lp");
  require_positive(hbar, "grid.hbar");

  Grid g;
  g.nx_ = nx;
  g.np_ = np;
  g.lx_ = lx;
  g.lp_ = lp;
  g.hbar_ = hbar;
  g.dx_ = 2.0 * lx / static_cast<double>(nx);
  g.dp_ = 2.0 * lp / static_cast<double>(np);
  g.x_ = uniform_samples(nx, lx, g.dx_);
  g.p_ = uniform_samples(np, lp, g.dp_);
  g.lambda_ = wrapped_frequencies(nx, g.dx_);
  g.theta_ = wrapped_frequencies(np, g.dp_);
  return g;
}

bool Grid::operator==(const Grid& other) const {
  return nx_ == other.nx_ && np_ == other.np_ && lx_ == other.lx_ &&
         lp_ == other.lp_ && hbar_ == other.hbar_;
}

}  // namespace wigprop
