// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace lpends::fft {

// Unnormalized DFT of each length-n row (contiguous, `rows` of them);
// sign = -1 forward, +1 backward.
void fft_rows(std::complex<double>* data, int rows, int n, int sign);

// Unnormalized 2-D DFT of an n0 x n1 row-major array.
void fft_2d(std::complex<double>* data, int n0, int n1, int sign);

}  // namespace lpends::fft
