#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace wigprop {

/// Angular frequencies of an n-point DFT with sample spacing d, in the
/// order the DFT produces them: [0, 1, ..., n/2 - 1, -n/2, ..., -1] scaled
/// by 2*pi/(n*d). n must be even and d positive.
std::vector<double> wrapped_frequencies(std::size_t n, double d);

/// Uniform phase-space discretization.
///
/// Axis 0 carries x (or its conjugate lambda), axis 1 carries p (or its
/// conjugate theta). Sample vectors start at -l and stop one step short of
/// +l, so the box is periodic with period 2l. The frequency vectors are kept
/// in wrapped order; every factor applied in a transformed representation is
/// built on the same wrapped vectors, which keeps them aligned with the raw
/// DFT output without any reordering.
///
/// Because x starts at -lx rather than 0, a forward DFT differs from the
/// continuum transform by a phase exp(i*lambda*lx) per output bin (likewise
/// for p/theta). Multiplication by a factor that is diagonal in that bin
/// index commutes with the phase, and the inverse DFT removes it again, so
/// no compensation is applied anywhere.
class Grid {
 public:
  /// Throws std::invalid_argument for odd or zero counts and non-positive
  /// (or non-finite) lengths.
  static Grid make(std::size_t nx, std::size_t np, double lx, double lp,
                   double hbar);

  std::size_t nx() const { return nx_; }
  std::size_t np() const { return np_; }
  std::size_t size() const { return nx_ * np_; }
  double lx() const { return lx_; }
  double lp() const { return lp_; }
  double dx() const { return dx_; }
  double dp() const { return dp_; }
  double hbar() const { return hbar_; }

  std::span<const double> x() const { return x_; }
  std::span<const double> p() const { return p_; }
  /// Conjugate to x, wrapped order.
  std::span<const double> lambda() const { return lambda_; }
  /// Conjugate to p, wrapped order.
  std::span<const double> theta() const { return theta_; }

  bool operator==(const Grid& other) const;

 private:
  Grid() = default;

  std::size_t nx_ = 0;
  std::size_t np_ = 0;
  double lx_ = 0.0;
  double lp_ = 0.0;
  double dx_ = 0.0;
  double dp_ = 0.0;
  double hbar_ = 1.0;
  std::vector<double> x_;
  std::vector<double> p_;
  std::vector<double> lambda_;
  std::vector<double> theta_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr make_shared_grid(std::size_t nx, std::size_t np, double lx,
                                double lp, double hbar) {
  return std::make_shared<const Grid>(Grid::make(nx, np, lx, lp, hbar));
}

}  // namespace wigprop
