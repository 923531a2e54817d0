// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lpends/spectral.hpp"

namespace lpends {

// The +-1 orthonormal sequence f_k(t) = f_0(2^k t) with f_0 = +1 on [0,1/2],
// -1 on (1/2,1), extended 1-periodically.
struct RademacherDraw {
  int k_max = 0;
  std::vector<double> coefficients;

  static int sign(int k, double t);
  // exact integral of f_j f_k over [0,1), by enumerating dyadic intervals
  static double pair_integral(int j, int k);
};

// sum_{k <= k_max} f_k(t) A_k u for a precomputed block set.
GridFunction rademacher_sum(const RademacherDraw& draw, const DyadicBlockSet& blocks, double t);

// (sum |a_k|^2)^{1/2} / ||sum a_k f_k||_{L^p([0,1])}, both sides evaluated
// exactly by enumerating the 2^len sign patterns.  Requires a nonzero vector
// of length <= 16 and p > 0.
double khintchine_ratio(const std::vector<double>& a, double p);

}  // namespace lpends
