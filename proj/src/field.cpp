#include "wigprop/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wigprop {

std::string_view to_string(Representation rep) {
  switch (rep) {
    case Representation::XP:
      return "XP";
    case Representation::XTheta:
      return "XTheta";
    case Representation::LambdaTheta:
      return "LambdaTheta";
    case Representation::LambdaP:
      return "LambdaP";
  }
  return "?";
}

Field::Field(GridPtr grid, Representation rep)
    : grid_(std::move(grid)), rep_(rep) {
  if (!grid_) throw std::invalid_argument("Field requires a grid");
  data_.assign(grid_->size(), Complex{});
}

Field::Field(GridPtr grid, Representation rep, ComplexBuffer data)
    : grid_(std::move(grid)), rep_(rep), data_(std::move(data)) {
  if (!grid_) throw std::invalid_argument("Field requires a grid");
  if (data_.size() != grid_->size()) {
    throw std::invalid_argument("Field data has " +
                                std::to_string(data_.size()) +
                                " entries, grid needs " +
                                std::to_string(grid_->size()));
  }
}

void Field::require(Representation expected, std::string_view op) const {
  if (rep_ != expected) {
    throw std::logic_error(std::string(op) + ": expected representation " +
                           std::string(to_string(expected)) + ", got " +
                           std::string(to_string(rep_)));
  }
}

void multiply_in_place(std::span<Complex> target,
                       std::span<const Complex> factor) {
  if (target.size() != factor.size()) {
    throw std::invalid_argument("factor shape does not match field");
  }
  // Plain product; std::complex operator* carries Annex G inf/nan recovery.
  for (std::size_t i = 0; i < target.size(); ++i) {
    const double ar = target[i].real();
    const double ai = target[i].imag();
    const double br = factor[i].real();
    const double bi = factor[i].imag();
    target[i] = Complex(ar * br - ai * bi, ar * bi + ai * br);
  }
}

bool all_finite(std::span<const Complex> data) {
  for (const auto& v : data) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

}  // namespace wigprop
