#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace wigprop {

enum class PotentialKind {
  Free,
  Harmonic,
  Quartic,
  Morse,
  MorseLinear,
  GaussianBarrier,
};

std::string_view to_string(PotentialKind kind);
std::optional<PotentialKind> parse_potential_kind(std::string_view name);

/// Dipole coupling -x * E(t), E(t) = amplitude * sin(frequency * t + phase).
struct Drive {
  double amplitude = 0.0;
  double frequency = 0.0;
  double phase = 0.0;
};

/// Potential energy U(x, t) from a fixed catalog.
///
///   free                 0
///   harmonic             m w^2 x^2 / 2
///   quartic              c x^4
///   morse                D (1 - exp(-a (x - x0)))^2
///   morse_linear         D (1 - exp(-a x))      (unbounded below)
///   gaussian_barrier     V0 exp(-(x - x0)^2 / (2 sigma^2))
///
/// Constructors throw std::invalid_argument for non-finite parameters and
/// for non-positive m, w, D, a, sigma.
class PotentialSpec {
 public:
  static PotentialSpec free();
  static PotentialSpec harmonic(double mass, double omega);
  static PotentialSpec quartic(double c);
  static PotentialSpec morse(double depth, double width, double x0);
  static PotentialSpec morse_linear(double depth = 20.0,
                                           double width = 0.16);
  static PotentialSpec gaussian_barrier(double height = 3.0,
                                        double sigma = 1.0, double x0 = 0.0);

  /// Returns a copy with the drive attached. A zero amplitude clears it.
  PotentialSpec with_drive(const Drive& drive) const;

  PotentialKind kind() const { return kind_; }
  const std::optional<Drive>& drive() const { return drive_; }
  bool is_time_dependent() const { return drive_.has_value(); }

  double evaluate(double x, double t = 0.0) const;
  double operator()(double x, double t = 0.0) const { return evaluate(x, t); }

  /// Short human-readable description, e.g. "quartic(c=0.1)".
  std::string describe() const;

  // Raw parameters; meaning depends on kind (see table above).
  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }

 private:
  PotentialSpec(PotentialKind kind, double a, double b, double c)
      : kind_(kind), a_(a), b_(b), c_(c) {}

  PotentialKind kind_;
  double a_;
  double b_;
  double c_;
  std::optional<Drive> drive_;
};

}  // namespace wigprop
