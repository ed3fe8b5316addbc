#include "wigprop/potentials.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wigprop {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("potential parameter ") + name +
                                " must be finite");
  }
}

void require_positive(double v, const char* name) {
  require_finite(v, name);
  if (v <= 0.0) {
    throw std::invalid_argument(std::string("potential parameter ") + name +
                                " must be positive");
  }
}

}  // namespace

std::string_view to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::Free:
      return "free";
    case PotentialKind::Harmonic:
      return "harmonic";
    case PotentialKind::Quartic:
      return "quartic";
    case PotentialKind::Morse:
      return "morse";
    case PotentialKind::MorseLinear:
      return "morse_linear";
    case PotentialKind::GaussianBarrier:
      return "gaussian_barrier";
  }
  return "?";
}

std::optional<PotentialKind> parse_potential_kind(std::string_view name) {
  for (auto kind :
       {PotentialKind::Free, PotentialKind::Harmonic, PotentialKind::Quartic,
        PotentialKind::Morse, PotentialKind::MorseLinear,
        PotentialKind::GaussianBarrier}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

PotentialSpec PotentialSpec::free() {
  return PotentialSpec(PotentialKind::Free, 0.0, 0.0, 0.0);
}

PotentialSpec PotentialSpec::harmonic(double mass, double omega) {
  require_positive(mass, "m");
  require_positive(omega, "omega");
  return PotentialSpec(PotentialKind::Harmonic, mass, omega, 0.0);
}

PotentialSpec PotentialSpec::quartic(double c) {
  require_finite(c, "c");
  return PotentialSpec(PotentialKind::Quartic, c, 0.0, 0.0);
}

PotentialSpec PotentialSpec::morse(double depth, double width, double x0) {
  require_positive(depth, "D");
  require_positive(width, "a");
  require_finite(x0, "x0");
  return PotentialSpec(PotentialKind::Morse, depth, width, x0);
}

PotentialSpec PotentialSpec::morse_linear(double depth, double width) {
  require_positive(depth, "D");
  require_positive(width, "a");
  return PotentialSpec(PotentialKind::MorseLinear, depth, width, 0.0);
}

PotentialSpec PotentialSpec::gaussian_barrier(double height, double sigma,
                                              double x0) {
  require_finite(height, "V0");
  require_positive(sigma, "sigma");
  require_finite(x0, "x0");
  return PotentialSpec(PotentialKind::GaussianBarrier, height, sigma, x0);
}

PotentialSpec PotentialSpec::with_drive(const Drive& drive) const {
  require_finite(drive.amplitude, "drive.E0");
  require_finite(drive.frequency, "drive.omega");
  require_finite(drive.phase, "drive.phase");
  PotentialSpec out = *this;
  if (drive.amplitude == 0.0) {
    out.drive_.reset();
  } else {
    out.drive_ = drive;
  }
  return out;
}

double PotentialSpec::evaluate(double x, double t) const {
  double u = 0.0;
  switch (kind_) {
    case PotentialKind::Free:
      break;
    case PotentialKind::Harmonic:
      u = 0.5 * a_ * b_ * b_ * x * x;
      break;
    case PotentialKind::Quartic: {
      const double x2 = x * x;
      u = a_ * x2 * x2;
      break;
    }
    case PotentialKind::Morse: {
      const double s = 1.0 - std::exp(-b_ * (x - c_));
      u = a_ * s * s;
      break;
    }
    case PotentialKind::MorseLinear:
      u = a_ * (1.0 - std::exp(-b_ * x));
      break;
    case PotentialKind::GaussianBarrier: {
      const double d = x - c_;
      u = a_ * std::exp(-d * d / (2.0 * b_ * b_));
      break;
    }
  }
  if (drive_) {
    u -= x * drive_->amplitude *
         std::sin(drive_->frequency * t + drive_->phase);
  }
  return u;
}

std::string PotentialSpec::describe() const {
  std::ostringstream os;
  os << to_string(kind_);
  switch (kind_) {
    case PotentialKind::Free:
      break;
    case PotentialKind::Harmonic:
      os << "(m=" << a_ << ", omega=" << b_ << ")";
      break;
    case PotentialKind::Quartic:
      os << "(c=" << a_ << ")";
      break;
    case PotentialKind::Morse:
      os << "(D=" << a_ << ", a=" << b_ << ", x0=" << c_ << ")";
      break;
    case PotentialKind::MorseLinear:
      os << "(D=" << a_ << ", a=" << b_ << ")";
      break;
    case PotentialKind::GaussianBarrier:
      os << "(V0=" << a_ << ", sigma=" << b_ << ", x0=" << c_ << ")";
      break;
  }
  if (drive_) {
    os << " + drive(E0=" << drive_->amplitude
       << ", omega=" << drive_->frequency << ", phase=" << drive_->phase
       << ")";
  }
  return os.str();
}

}  // namespace wigprop
