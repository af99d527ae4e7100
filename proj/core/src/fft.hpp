#pragma once

#include <vector>

#include "varspace/grid.hpp"

namespace varspace::detail {

// Unnormalized in-place transforms on a grid-shaped buffer.
// forward: X_k = sum_x f_x e^{-2 pi i k x}; backward: the conjugate sum.
void fft_forward(const Grid& grid, std::vector<Complex>& data);
void fft_backward(const Grid& grid, std::vector<Complex>& data);

}  // namespace varspace::detail
