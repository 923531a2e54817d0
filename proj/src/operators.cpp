// SPDX-License-Identifier: Apache-2.0
#include "lpends/operators.hpp"

#include <cmath>

#include "lpends/errors.hpp"

namespace lpends {

std::vector<double> SymmetricOperator::apply(const std::vector<double>& u) const {
  std::vector<double> y(N, 0.0);
  if (variant == Variant::modified) {
    for (int j = 0; j < N; ++j) {
      double acc = diag[j] * u[j];
      if (j > 0) acc += offdiag[j - 1] * u[j - 1];
      if (j + 1 < N) acc += offdiag[j] * u[j + 1];
      y[j] = acc;
    }
  } else {
    for (int j = 0; j < N; ++j) {
      double acc = diag[j] * scale[j] * u[j];
      if (j > 0) acc += offdiag[j - 1] * scale[j - 1] * u[j - 1];
      if (j + 1 < N) acc += offdiag[j] * scale[j + 1] * u[j + 1];
      y[j] = acc / scale[j];
    }
  }
  return y;
}

double SymmetricOperator::inner(const std::vector<double>& u, const std::vector<double>& v) const {
  double acc = 0.0;
  for (int j = 0; j < N; ++j) acc += u[j] * v[j] * radial_weight[j] * dr;
  return acc;
}

SymmetricOperator assemble_operator_musq(const ModelEnd& end, Variant variant, double musq) {
  SymmetricOperator op;
  op.variant = variant;
  op.mode = static_cast<int>(std::lround(std::sqrt(musq)));
  op.N = end.N;
  op.dr = end.dr;
  op.diag.resize(end.N);
  op.offdiag.resize(end.N - 1);
  op.scale.resize(end.N);
  op.radial_weight.resize(end.N);

  const int n = end.n;
  const double inv_dr2 = 1.0 / (end.dr * end.dr);
  // flux coefficients w^{1-n} at cell faces, including the boundary faces
  std::vector<double> kappa(end.N + 1);
  for (int f = 0; f <= end.N; ++f) kappa[f] = std::pow(end.warp(end.R + f * end.dr), 1 - n);

  for (int j = 0; j < end.N; ++j) {
    double rho = end.rho[j];
    double wj = end.warp(end.r[j]);
    op.scale[j] = std::sqrt(rho);  // w^{(1-n)/2}
    op.diag[j] = (kappa[j] + kappa[j + 1]) / rho * inv_dr2 + musq * wj * wj;
    op.radial_weight[j] = variant == Variant::plain ? rho : 1.0;
  }
  for (int j = 0; j + 1 < end.N; ++j)
    op.offdiag[j] = -kappa[j + 1] * inv_dr2 / std::sqrt(end.rho[j] * end.rho[j + 1]);
  return op;
}

SymmetricOperator assemble_operator(const ModelEnd& end, Variant variant, int m) {
  if (2 * std::abs(m) >= end.mode_count)
    fail(ErrorCode::InvalidMode, "mode " + std::to_string(m) + " out of range");
  SymmetricOperator op = assemble_operator_musq(end, variant, static_cast<double>(m) * m);
  op.mode = m;
  return op;
}

}  // namespace lpends
