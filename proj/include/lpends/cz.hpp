// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "lpends/grid.hpp"
#include "lpends/warp.hpp"

namespace lpends {

// One cell of the adapted dyadic family on Omega = (R,inf) x R^{n-1}:
// radial interval 2^{-k+}(i, i+1], angular box tau * [m_a, m_a + 1) per axis
// with tau = 2^{-k} w([2^{-k+} i]) anchored at the integer part of the left
// radial endpoint.
struct PartitionCell {
  int k = 0;
  long long i = 0;
  std::vector<long long> m;
  double r_lo = 0.0, r_hi = 0.0;  // (r_lo, r_hi]
  double tau = 0.0;
  double base_w = 0.0;  // warp at the integer base point

  bool contains_r(double r) const { return r > r_lo && r <= r_hi; }
  bool contains_theta(const std::vector<double>& th) const;
  double diameter(int n) const;
};

// Geometry of the admissible family for a fixed warp, inner radius and
// dimension, together with the measured comparability constants: C2 bounds
// cell measures against their dyadic size, C3 bounds parent/child measure
// ratios.
class AdmissibleFamily {
 public:
  AdmissibleFamily(const Warp& w, long long R, int n, double r_scan_hi);

  PartitionCell cell(int k, long long i, const std::vector<long long>& m) const;
  // Continuum cell measure by radial quadrature of (w(base)/w(r))^{n-1}.
  double cell_measure(const PartitionCell& c) const;
  PartitionCell parent(const PartitionCell& c, int min_level) const;
  PartitionCell locate(double r, const std::vector<double>& theta, int k) const;

  const Warp& warp() const { return warp_; }
  long long R() const { return R_; }
  int dim() const { return n_; }
  double measured_C2() const { return c2_; }
  double measured_C3() const { return c3_; }

 private:
  Warp warp_;
  long long R_ = 0;
  int n_ = 2;
  double c2_ = 1.0, c3_ = 1.0;
};

struct SelectedCell {
  PartitionCell cell;
  double nu_disc = 0.0;         // grid-restricted measure
  double nu_parent_disc = 0.0;
  double nu_cont = 0.0;         // continuum cell measure
  double nu_star_cont = 0.0;    // continuum measure of the enlarged set
  std::complex<double> avg;     // cell average of u
  double r_center = 0.0;
  std::vector<double> theta_center;
  double t = 0.0;               // covering radius
  bool slab = false;            // true when t > 1 (wide-cell regime)
};

struct CZDecomposition {
  double lambda = 0.0;
  double D = 1.0;
  int n0 = 0;
  GridFunction good;               // the bounded part; equals u off the cells
  std::vector<SelectedCell> cells;
  std::vector<int> cell_of_node;   // node -> selected-cell index, -1 on the good set
  double C0_measured = 1.0;        // max parent/child discrete ratio over selections

  GridFunction bad_piece(const GridFunction& u, int j) const;
};

// Stopping-time decomposition in the discrete measure nu = w^{1-n} dr dtheta
// restricted to the grid.  u should be compactly supported in the interior of
// the grid box.  Throws DomainError for empty input.
CZDecomposition cz_decompose(const GridFunction& u, double lambda, double D,
                             const AdmissibleFamily& fam, const ModelEnd& end);

// Level-k cell averages of u in the discrete measure.
GridFunction conditional_expectation(const GridFunction& u, int k, const AdmissibleFamily& fam,
                                     const ModelEnd& end);

struct CZCheck {
  const char* name = "";
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct CZReport {
  std::vector<CZCheck> checks;
  double C_D = 0.0;      // measured enlargement constant
  double ceiling = 0.0;  // proof-chain cap on C_D
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

CZReport verify_cz(const CZDecomposition& dec, const GridFunction& u, const AdmissibleFamily& fam,
                   const ModelEnd& end);

}  // namespace lpends
