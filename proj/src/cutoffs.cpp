// SPDX-License-Identifier: Apache-2.0
#include "lpends/cutoffs.hpp"

#include <cmath>

#include "lpends/errors.hpp"

namespace lpends {

namespace {

// Bump on (1,2); the smoothness order scales the exponent.
double bump(double s, int p) {
  if (s <= 1.0 || s >= 2.0) return 0.0;
  return std::exp(-static_cast<double>(p) / ((s - 1.0) * (2.0 - s)));
}

}  // namespace

// Cached cumulative of the bump on a dense grid.  Evaluation uses cubic
// Hermite interpolation with the exact bump as derivative, so psi is C^1 to
// the eye and accurate to ~1e-15 at this resolution.
struct DyadicCutoffs::Table {
  static constexpr int kCells = 8192;
  double h = 1.0 / kCells;
  std::vector<double> cum;   // cumulative integral at nodes 1 + i*h
  std::vector<double> der;   // bump values at nodes
  double total = 0.0;
  int p = 1;

  explicit Table(int smoothness) : p(smoothness) {
    cum.resize(kCells + 1, 0.0);
    der.resize(kCells + 1, 0.0);
    // 7-point Gauss-Legendre per cell
    static const double gx[7] = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                                 0.0,                  0.4058451513773972,  0.7415311855993945,
                                 0.9491079123427585};
    static const double gw[7] = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                                 0.4179591836734694, 0.3818300505051189, 0.2797053914892766,
                                 0.1294849661688697};
    for (int i = 0; i <= kCells; ++i) der[i] = bump(1.0 + i * h, p);
    for (int i = 0; i < kCells; ++i) {
      double a = 1.0 + i * h, acc = 0.0;
      for (int q = 0; q < 7; ++q) acc += gw[q] * bump(a + 0.5 * h * (1.0 + gx[q]), p);
      cum[i + 1] = cum[i] + 0.5 * h * acc;
    }
    total = cum[kCells];
  }

  // integral of the bump from 1 to s, for s in [1,2]
  double integral(double s) const {
    double t = (s - 1.0) / h;
    int i = static_cast<int>(t);
    if (i >= kCells) return total;
    if (i < 0) return 0.0;
    double u = t - i;
    double y0 = cum[i], y1 = cum[i + 1], d0 = der[i] * h, d1 = der[i + 1] * h;
    double u2 = u * u, u3 = u2 * u;
    return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * d0 + (-2 * u3 + 3 * u2) * y1 +
           (u3 - u2) * d1;
  }
};

DyadicCutoffs::DyadicCutoffs(int smoothness) : smoothness_(smoothness) {
  if (smoothness < 1) fail(ErrorCode::DomainError, "smoothness must be >= 1");
  table_ = std::make_shared<Table>(smoothness);
}

double DyadicCutoffs::psi(double x) const {
  if (x <= 1.0) return 1.0;
  if (x >= 2.0) return 0.0;
  return 1.0 - table_->integral(x) / table_->total;
}

double DyadicCutoffs::phi(double x) const {
  if (x <= 1.0 || x >= 4.0) return 0.0;
  return psi(0.5 * x) - psi(x);
}

double DyadicCutoffs::phi1(double x) const {
  if (x <= 0.5 || x >= 8.0) return 0.0;
  return psi(0.25 * x) * (1.0 - psi(2.0 * x));
}

double DyadicCutoffs::eval(CutoffName which, double x) const {
  if (x < 0.0) fail(ErrorCode::DomainError, "cutoffs are defined on [0,inf)");
  switch (which) {
    case CutoffName::psi: return psi(x);
    case CutoffName::phi0: return phi0(x);
    case CutoffName::phi: return phi(x);
    case CutoffName::phi1: return phi1(x);
  }
  return 0.0;
}

double DyadicCutoffs::block(int k, double x) const {
  if (k < 0) fail(ErrorCode::DomainError, "block index must be >= 0");
  if (k == 0) return phi0(x);
  return phi(std::ldexp(x, -(k - 1)));
}

PartitionResidual partition_residual(const DyadicCutoffs& c, const std::vector<double>& grid,
                                     int K) {
  PartitionResidual out;
  const double limit = std::ldexp(1.0, K + 1);
  for (double x : grid) {
    double sum = c.phi0(x);
    for (int k = 0; k <= K; ++k) sum += c.phi(std::ldexp(x, -k));
    double res = std::abs(1.0 - sum);
    if (x <= limit) {
      out.residual = std::max(out.residual, res);
    } else {
      out.beyond_range = std::max(out.beyond_range, res);
      ++out.flagged;
    }
  }
  return out;
}

}  // namespace lpends
