#pragma once

#include <cstddef>
#include <span>

#include "wigprop/field.hpp"

namespace wigprop {

/// Forward: out[j] = sum_k in[k] exp(-2 pi i jk/N), unnormalized.
/// Inverse: out[k] = (1/N) sum_j in[j] exp(+2 pi i jk/N).
enum class Direction { Forward, Inverse };

/// Number of threads handed to the FFT backend for plans created after the
/// call. Values < 1 are clamped to 1.
void set_transform_threads(int threads);
int transform_threads();

/// In-place DFT along one axis of a row-major rows x cols buffer, batched
/// over the other axis. Plans are cached per (shape, axis, direction,
/// threads) and reused for the lifetime of the process.
void dft_axis(std::span<Complex> data, std::size_t rows, std::size_t cols,
              int axis, Direction dir);

/// In-place 1-D DFT.
inline void dft_1d(std::span<Complex> data, Direction dir) {
  dft_axis(data, data.size(), 1, 0, dir);
}

/// Axis-wise transform of a Field; updates the representation tag.
/// Axis 0 forward maps x -> lambda, axis 1 forward maps p -> theta.
/// Throws std::logic_error if the axis is not in the matching source
/// variable.
void transform_axis(Field& f, int axis, Direction dir);

// W(x,p) <-> B(x,theta): forward / inverse DFT along axis 1.
Field xp_to_xtheta(Field f);
Field xtheta_to_xp(Field f);

// B(x,theta) <-> A(lambda,p): forward along x then inverse along theta, and
// back. This pair is the map the kinetic step is diagonal under.
Field xtheta_to_lambdap(Field f);
Field lambdap_to_xtheta(Field f);

// B(x,theta) <-> Z(lambda,theta): forward / inverse DFT along axis 0.
Field xtheta_to_lambdatheta(Field f);
Field lambdatheta_to_xtheta(Field f);

// A(lambda,p) -> W(x,p): inverse DFT along axis 0. Closes a split step.
Field lambdap_to_xp(Field f);
Field xp_to_lambdap(Field f);

}  // namespace wigprop
