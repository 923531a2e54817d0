// SPDX-License-Identifier: Apache-2.0
#include "lpends/rademacher.hpp"

#include <cmath>

#include "lpends/errors.hpp"

namespace lpends {

int RademacherDraw::sign(int k, double t) {
  double x = std::ldexp(t, k);
  double frac = x - std::floor(x);
  return frac < 0.5 ? 1 : -1;
}

double RademacherDraw::pair_integral(int j, int k) {
  int depth = std::max(j, k) + 1;
  long long cells = 1LL << depth;
  long long acc = 0;  // exact integer sum of sign products
  for (long long c = 0; c < cells; ++c) {
    double t = (c + 0.5) / static_cast<double>(cells);
    acc += sign(j, t) * sign(k, t);
  }
  return static_cast<double>(acc) / static_cast<double>(cells);
}

GridFunction rademacher_sum(const RademacherDraw& draw, const DyadicBlockSet& blocks, double t) {
  if (t < 0.0 || t >= 1.0) fail(ErrorCode::DomainError, "t must lie in [0,1)");
  int kmax = std::min<int>(draw.k_max, static_cast<int>(blocks.blocks.size()) - 1);
  GridFunction out(blocks.blocks.empty() ? 0 : blocks.blocks[0].N,
                   blocks.blocks.empty() ? 0 : blocks.blocks[0].mc);
  for (int k = 0; k <= kmax; ++k) {
    double s = RademacherDraw::sign(k, t);
    const auto& b = blocks.blocks[k];
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] += s * b.v[i];
  }
  return out;
}

double khintchine_ratio(const std::vector<double>& a, double p) {
  if (a.empty() || a.size() > 16) fail(ErrorCode::DomainError, "need 1..16 coefficients");
  if (!(p > 0.0)) fail(ErrorCode::DomainError, "p must be positive");
  bool all_zero = true;
  for (double v : a) all_zero = all_zero && v == 0.0;
  if (all_zero) fail(ErrorCode::DomainError, "all-zero coefficient vector");

  const int len = static_cast<int>(a.size());
  const long long cells = 1LL << len;
  // On cell c the sign of f_k is determined by bit (len-1-k) of c.
  long double acc = 0.0L;
  for (long long c = 0; c < cells; ++c) {
    double F = 0.0;
    for (int k = 0; k < len; ++k) {
      bool neg = (c >> (len - 1 - k)) & 1;
      F += neg ? -a[k] : a[k];
    }
    acc += std::pow(static_cast<long double>(std::abs(F)), static_cast<long double>(p));
  }
  long double lp = std::pow(acc / cells, 1.0L / static_cast<long double>(p));

  long double sq = 0.0L;
  for (double v : a) sq += static_cast<long double>(v) * v;
  return static_cast<double>(std::sqrt(sq) / lp);
}

}  // namespace lpends
