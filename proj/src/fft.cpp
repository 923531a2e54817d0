// SPDX-License-Identifier: Apache-2.0
#include "lpends/fft.hpp"

#include <fftw3.h>

#include <mutex>

namespace lpends::fft {

namespace {
std::mutex plan_mutex;  // FFTW plan creation is not thread-safe
}

void fft_rows(std::complex<double>* data, int rows, int n, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    plan = fftw_plan_many_dft(1, &n, rows, ptr, nullptr, 1, n, ptr, nullptr, 1, n,
                              sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
}

void fft_2d(std::complex<double>* data, int n0, int n1, int sign) {
  auto* ptr = reinterpret_cast<fftw_complex*>(data);
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    plan = fftw_plan_dft_2d(n0, n1, ptr, ptr, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex);
    fftw_destroy_plan(plan);
  }
}

}  // namespace lpends::fft
