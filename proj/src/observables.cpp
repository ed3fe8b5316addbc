#include "wigprop/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wigprop/transforms.hpp"

namespace wigprop {

namespace {

double cell(const Field& w) { return w.grid().dx() * w.grid().dp(); }

double max_abs(std::span<const Complex> data) {
  double m = 0.0;
  for (const auto& v : data) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

double total_probability(const Field& w) {
  w.require(Representation::XP, "total_probability");
  double sum = 0.0;
  for (const auto& v : w.data()) sum += v.real();
  return cell(w) * sum;
}

double purity(const Field& w) {
  w.require(Representation::XP, "purity");
  double sum = 0.0;
  for (const auto& v : w.data()) sum += v.real() * v.real();
  return 2.0 * std::numbers::pi * w.grid().hbar() * cell(w) * sum;
}

double expectation(const Field& w,
                   const std::function<double(double, double)>& f) {
  w.require(Representation::XP, "expectation");
  const auto x = w.grid().x();
  const auto p = w.grid().p();
  double sum = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      sum += f(x[i], p[j]) * w(i, j).real();
    }
  }
  return cell(w) * sum;
}

double mean_x(const Field& w) {
  const auto m = marginals(w);
  const auto x = w.grid().x();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * m.rho_x[i];
  return w.grid().dx() * sum;
}

double mean_p(const Field& w) {
  const auto m = marginals(w);
  const auto p = w.grid().p();
  double sum = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) sum += p[j] * m.rho_p[j];
  return w.grid().dp() * sum;
}

double energy(const Field& w, const PotentialSpec& potential, double mass,
              double t) {
  w.require(Representation::XP, "energy");
  const auto m = marginals(w);
  const auto x = w.grid().x();
  const auto p = w.grid().p();
  double kinetic = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    kinetic += p[j] * p[j] * m.rho_p[j];
  }
  double pot = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    pot += potential.evaluate(x[i], t) * m.rho_x[i];
  }
  return w.grid().dp() * kinetic / (2.0 * mass) + w.grid().dx() * pot;
}

Marginals marginals(const Field& w) {
  w.require(Representation::XP, "marginals");
  Marginals m;
  m.rho_x.assign(w.rows(), 0.0);
  m.rho_p.assign(w.cols(), 0.0);
  for (std::size_t i = 0; i < w.rows(); ++i) {
    for (std::size_t j = 0; j < w.cols(); ++j) {
      const double v = w(i, j).real();
      m.rho_x[i] += v;
      m.rho_p[j] += v;
    }
  }
  for (auto& v : m.rho_x) v *= w.grid().dp();
  for (auto& v : m.rho_p) v *= w.grid().dx();
  return m;
}

double negativity_volume(const Field& w) {
  w.require(Representation::XP, "negativity_volume");
  double abs_sum = 0.0;
  double sum = 0.0;
  for (const auto& v : w.data()) {
    abs_sum += std::abs(v.real());
    sum += v.real();
  }
  return cell(w) * (abs_sum - sum);
}

double min_value(const Field& w) {
  w.require(Representation::XP, "min_value");
  double m = std::numeric_limits<double>::infinity();
  for (const auto& v : w.data()) m = std::min(m, v.real());
  return m;
}

double max_imag_relative(const Field& w) {
  w.require(Representation::XP, "max_imag_relative");
  double im = 0.0;
  for (const auto& v : w.data()) im = std::max(im, std::abs(v.imag()));
  const double peak = max_abs(w.data());
  return peak > 0.0 ? im / peak : 0.0;
}

double boundary_mass(const Field& w) {
  w.require(Representation::XP, "boundary_mass");
  const std::size_t rows = w.rows();
  const std::size_t cols = w.cols();
  double sum = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    sum += std::abs(w(0, j)) + std::abs(w(rows - 1, j));
  }
  for (std::size_t i = 1; i + 1 < rows; ++i) {
    sum += std::abs(w(i, 0)) + std::abs(w(i, cols - 1));
  }
  return cell(w) * sum;
}

double nyquist_content(const Field& w) {
  w.require(Representation::XP, "nyquist_content");
  const std::size_t rows = w.rows();
  const std::size_t cols = w.cols();

  Field b = xp_to_xtheta(w);
  double b_peak = max_abs(b.data());
  double b_nyq = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    b_nyq = std::max(b_nyq, std::abs(b(i, cols / 2)));
  }

  Field a = xp_to_lambdap(w);
  double a_peak = max_abs(a.data());
  double a_nyq = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    a_nyq = std::max(a_nyq, std::abs(a(rows / 2, j)));
  }

  const double rb = b_peak > 0.0 ? b_nyq / b_peak : 0.0;
  const double ra = a_peak > 0.0 ? a_nyq / a_peak : 0.0;
  return std::max(rb, ra);
}

DiagnosticsRecord diagnose(const Field& w, const PotentialSpec& potential,
                           double mass, double t, std::size_t step) {
  DiagnosticsRecord r;
  r.step = step;
  r.t = t;
  r.total_prob = total_probability(w);
  const double norm = r.total_prob != 0.0 ? r.total_prob : 1.0;
  r.purity = purity(w) / (norm * norm);
  r.mean_x = mean_x(w) / norm;
  r.mean_p = mean_p(w) / norm;
  r.energy = energy(w, potential, mass, t) / norm;
  r.min_w = min_value(w);
  r.max_im_rel = max_imag_relative(w);
  r.boundary_mass = boundary_mass(w);
  r.nyquist_rel = nyquist_content(w);
  return r;
}

}  // namespace wigprop
