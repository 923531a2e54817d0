// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "lpends/warp.hpp"
#include "lpends/weight.hpp"

namespace lpends {

enum class Measure { dg, dtildeg };

// Discretized model end (R, R_max) x S^1 with cell-centered nodes in both
// directions: r_j = R + (j+1/2) dr and theta_l = -pi + (l+1/2) dtheta.
// Two volume elements live on the same grid: dg carries the density
// w(r)^{1-n} while the flattened element dtildeg is uniform.
struct ModelEnd {
  double R = 0.0, R_max = 1.0;
  int N = 8;          // radial cells
  int n = 2;          // manifold dimension
  int mode_count = 8; // angular nodes / Fourier modes
  double dr = 0.0, dtheta = 0.0;
  Warp warp;
  std::vector<double> r;      // cell centers
  std::vector<double> theta;  // angular nodes in [-pi, pi)
  std::vector<double> rho;    // w(r_j)^{1-n}

  int nodes() const { return N * mode_count; }
  double node_weight(int j, Measure mu) const {
    return (mu == Measure::dg ? rho[j] : 1.0) * dr * dtheta;
  }
  double dg_volume() const;
  double dtildeg_volume() const;
};

// Throws GridTooCoarse for N < 8 and DomainError for an empty radius range.
ModelEnd build_model_end(double R, double R_max, int N, int n, int mode_count, Warp w);

// Complex values on the (radial, angular) grid, row-major with the angular
// index fastest.
struct GridFunction {
  int N = 0, mc = 0;
  std::vector<std::complex<double>> v;

  GridFunction() = default;
  GridFunction(int N_, int mc_) : N(N_), mc(mc_), v(static_cast<size_t>(N_) * mc_) {}
  std::complex<double>& at(int j, int l) { return v[static_cast<size_t>(j) * mc + l]; }
  const std::complex<double>& at(int j, int l) const { return v[static_cast<size_t>(j) * mc + l]; }
  bool empty_or_zero() const;
};

GridFunction zeros_like(const ModelEnd& end);

double norm_lp(const GridFunction& u, double p, Measure mu, const ModelEnd& end);
double norm_l2(const GridFunction& u, Measure mu, const ModelEnd& end);
std::complex<double> inner(const GridFunction& u, const GridFunction& v, Measure mu,
                           const ModelEnd& end);
double norm_l1(const GridFunction& u, Measure mu, const ModelEnd& end);

// Midpoint-quadrature L^p norm of W(r) u in the chosen measure; p must lie in
// (1, inf).
double weighted_norm(const GridFunction& u, double p, const TemperateWeight& W, Measure mu,
                     const ModelEnd& end);

}  // namespace lpends
