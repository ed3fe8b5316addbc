#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <span>
#include <string_view>
#include <vector>

#include "wigprop/grid.hpp"

namespace wigprop {

using Complex = std::complex<double>;

/// 64-byte aligned allocator so buffers can be handed to cached FFT plans
/// created on other buffers.
template <typename T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t alignment{64};

  AlignedAllocator() noexcept = default;
  template <typename U>
  AlignedAllocator(const AlignedAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    return static_cast<T*>(::operator new(n * sizeof(T), alignment));
  }
  void deallocate(T* ptr, std::size_t) noexcept {
    ::operator delete(ptr, alignment);
  }

  template <typename U>
  bool operator==(const AlignedAllocator<U>&) const noexcept {
    return true;
  }
};

/// Row-major nx x np complex matrix.
using ComplexBuffer = std::vector<Complex, AlignedAllocator<Complex>>;

/// Which pair of variables indexes the two axes.
enum class Representation { XP, XTheta, LambdaTheta, LambdaP };

std::string_view to_string(Representation rep);

/// Complex nx x np matrix on a Grid, tagged with the representation its
/// axes are in. Axis 1 is contiguous.
class Field {
 public:
  Field(GridPtr grid, Representation rep);
  Field(GridPtr grid, Representation rep, ComplexBuffer data);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  Representation rep() const { return rep_; }
  void set_rep(Representation rep) { rep_ = rep; }

  std::size_t rows() const { return grid_->nx(); }
  std::size_t cols() const { return grid_->np(); }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * grid_->np() + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * grid_->np() + j];
  }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }
  const ComplexBuffer& buffer() const { return data_; }

  /// Throws std::logic_error naming both tags when rep() != expected.
  void require(Representation expected, std::string_view op) const;

 private:
  GridPtr grid_;
  Representation rep_;
  ComplexBuffer data_;
};

/// Elementwise in-place product; shapes must match.
void multiply_in_place(std::span<Complex> target,
                       std::span<const Complex> factor);

bool all_finite(std::span<const Complex> data);

}  // namespace wigprop
