// SPDX-License-Identifier: Apache-2.0
#include "lpends/grid.hpp"

#include <cmath>

#include "lpends/errors.hpp"

namespace lpends {

double ModelEnd::dg_volume() const {
  double acc = 0.0;
  for (int j = 0; j < N; ++j) acc += rho[j];
  return acc * dr * dtheta * mode_count;
}

double ModelEnd::dtildeg_volume() const { return (R_max - R) * dtheta * mode_count; }

ModelEnd build_model_end(double R, double R_max, int N, int n, int mode_count, Warp w) {
  if (!(R_max > R)) fail(ErrorCode::DomainError, "need R < R_max");
  if (N < 8) fail(ErrorCode::GridTooCoarse, "need at least 8 radial cells");
  if (mode_count < 2) fail(ErrorCode::DomainError, "need at least 2 angular modes");
  if (n < 2) fail(ErrorCode::DomainError, "dimension must be >= 2");
  ModelEnd end;
  end.R = R;
  end.R_max = R_max;
  end.N = N;
  end.n = n;
  end.mode_count = mode_count;
  end.warp = std::move(w);
  end.dr = (R_max - R) / N;
  end.dtheta = 2.0 * M_PI / mode_count;
  end.r.resize(N);
  end.rho.resize(N);
  for (int j = 0; j < N; ++j) {
    end.r[j] = R + (j + 0.5) * end.dr;
    end.rho[j] = std::pow(end.warp(end.r[j]), 1 - n);
  }
  end.theta.resize(mode_count);
  for (int l = 0; l < mode_count; ++l) end.theta[l] = -M_PI + (l + 0.5) * end.dtheta;
  return end;
}

bool GridFunction::empty_or_zero() const {
  for (const auto& z : v)
    if (z != std::complex<double>(0.0, 0.0)) return false;
  return true;
}

GridFunction zeros_like(const ModelEnd& end) { return GridFunction(end.N, end.mode_count); }

double norm_lp(const GridFunction& u, double p, Measure mu, const ModelEnd& end) {
  double acc = 0.0;
  for (int j = 0; j < u.N; ++j) {
    double wj = end.node_weight(j, mu), row = 0.0;
    for (int l = 0; l < u.mc; ++l) row += std::pow(std::abs(u.at(j, l)), p);
    acc += row * wj;
  }
  return std::pow(acc, 1.0 / p);
}

double norm_l2(const GridFunction& u, Measure mu, const ModelEnd& end) {
  double acc = 0.0;
  for (int j = 0; j < u.N; ++j) {
    double wj = end.node_weight(j, mu), row = 0.0;
    for (int l = 0; l < u.mc; ++l) row += std::norm(u.at(j, l));
    acc += row * wj;
  }
  return std::sqrt(acc);
}

double norm_l1(const GridFunction& u, Measure mu, const ModelEnd& end) {
  double acc = 0.0;
  for (int j = 0; j < u.N; ++j) {
    double wj = end.node_weight(j, mu), row = 0.0;
    for (int l = 0; l < u.mc; ++l) row += std::abs(u.at(j, l));
    acc += row * wj;
  }
  return acc;
}

std::complex<double> inner(const GridFunction& u, const GridFunction& v, Measure mu,
                           const ModelEnd& end) {
  std::complex<double> acc = 0.0;
  for (int j = 0; j < u.N; ++j) {
    double wj = end.node_weight(j, mu);
    std::complex<double> row = 0.0;
    for (int l = 0; l < u.mc; ++l) row += std::conj(u.at(j, l)) * v.at(j, l);
    acc += row * wj;
  }
  return acc;
}

double weighted_norm(const GridFunction& u, double p, const TemperateWeight& W, Measure mu,
                     const ModelEnd& end) {
  if (!(p > 1.0) || !std::isfinite(p)) fail(ErrorCode::DomainError, "p must lie in (1, inf)");
  double acc = 0.0;
  for (int j = 0; j < u.N; ++j) {
    double wj = end.node_weight(j, mu) * std::pow(W(end.r[j]), p);
    double row = 0.0;
    for (int l = 0; l < u.mc; ++l) row += std::pow(std::abs(u.at(j, l)), p);
    acc += row * wj;
  }
  return std::pow(acc, 1.0 / p);
}

}  // namespace lpends
