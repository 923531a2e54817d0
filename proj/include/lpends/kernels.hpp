// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "lpends/cutoffs.hpp"
#include "lpends/grid.hpp"
#include "lpends/warp.hpp"
#include "lpends/weight.hpp"

namespace lpends {

// Frequency-localized symbol family a_k(r,theta,rho,eta): a low-frequency
// ball profile at k = 0 and a fixed dyadic annulus profile for k >= 1, both
// radial in (rho, eta) and constant over the grid in (r, theta).
class SymbolFamily {
 public:
  // Profiles built from the dyadic cutoffs; support of the annulus profile is
  // |{rho,eta}| in (ann_lo, ann_hi).  Throws DomainError on an empty annulus.
  SymbolFamily(int K_sym, double ann_lo, double ann_hi, int smoothness = 1);

  static SymbolFamily zero_family(int K_sym);

  int K_sym() const { return K_sym_; }
  double ann_lo() const { return ann_lo_; }
  double ann_hi() const { return ann_hi_; }
  bool is_zero() const { return zero_; }

  // radial profile value of a_k at |{rho,eta}| = t
  double profile(int k, double t) const;
  double operator()(int k, double rho, double eta) const {
    return profile(k, std::hypot(rho, eta));
  }

  // Sampled seminorm table: max |d^o a| (1 + t^2)^m over the support, for
  // derivative order o <= 2 and decay power m <= 3.
  double seminorm(int order, int decay) const;

 private:
  SymbolFamily() = default;
  int K_sym_ = 0;
  double ann_lo_ = 1.0, ann_hi_ = 4.0;
  bool zero_ = false;
  DyadicCutoffs cutoffs_{1};
  std::vector<double> seminorms_;  // [order * 4 + decay]
};

// Rectangular grid on the truncated funnel Omega = (R, R + len_r) x
// [-len_th/2, len_th/2) carrying the measure nu = w^{1-n} dr dtheta (n = 2).
struct KernelGrid {
  double R = 0.0, len_r = 4.0, len_th = 4.0;
  int Nr = 256, Nth = 128;
  double dr = 0.0, dth = 0.0;
  Warp warp;
  std::vector<double> r, theta, rho;  // rho = 1/w(r_j)

  double node_weight(int j) const { return rho[j] * dr * dth; }
};

KernelGrid make_kernel_grid(const Warp& w, double R, double len_r, int Nr, double len_th, int Nth);

double kg_norm_lp(const GridFunction& u, double p, const KernelGrid& g);
double kg_norm_l1(const GridFunction& u, const KernelGrid& g);
double kg_norm_l2(const GridFunction& u, const KernelGrid& g);
// nu-measure of {|u| > level}
double kg_measure_above(const GridFunction& u, double level, const KernelGrid& g);

// Properly supported kernel K_(M) assembled from the family's partial Fourier
// transforms, together with the machinery around it: the scaled-cutoff
// variant actually applied on the grid, the difference pieces J_k handled by
// Schur bounds, and the weighted symbol used for the gradient estimate.
//
// The grid operator materializes the band-limited kernel per radial output
// node from the Fourier tables and then windows it to its exact support, so
// applications stay bounded uniformly in M (pointwise sampling of the
// 2^{kn}-scaled summands would alias once 2^{-k} drops below the spacing).
class ProperKernel {
 public:
  ProperKernel(const SymbolFamily& fam, const Warp& w, int M, const KernelGrid& grid);

  int M() const { return M_; }
  const KernelGrid& grid() const { return grid_; }

  // radial cutoff: 1 on the half ball, 0 outside the unit ball
  double zeta(double radius) const;
  // radial partial-Fourier profile of a_k at |{rho_hat, eta_hat}| = s
  double ahat(int k, double s) const;

  // pointwise kernels (exactly zero beyond their cutoff support)
  double eval_KM(double r, double th, double rp, double thp) const;
  double eval_Ktilde(double r, double th, double rp, double thp) const;
  double eval_Jk(int k, double r, double th, double rp, double thp) const;

  // weighted symbol b_{M,W}(r, rho_hat, eta_hat)
  double b_MW(double r, double rho_hat, double eta_hat,
              const std::function<double(double)>& W) const;

  // grid operator for the scaled-cutoff kernel and its exact nu-adjoint
  GridFunction apply(const GridFunction& u) const;
  GridFunction apply_adjoint(const GridFunction& v) const;

 private:
  SymbolFamily fam_;
  Warp warp_;
  int M_ = 0;
  KernelGrid grid_;
  struct Tables;
  std::shared_ptr<const Tables> tables_;
};

// Schur bound (max of sup-row and sup-column nu-integrals) of the weighted
// difference piece W w^{(1-n)/p} J_k W^{-1} w^{(n-1)/p}.
double remainder_schur(const ProperKernel& kern, int k, const TemperateWeight& W, double p);

struct SymbolBound {
  double constant = 0.0;  // smallest admissible C over the samples
  bool pass = true;
};
// Finite-difference check of |grad b_{M,W}| <= C (|rho_hat| + |eta_hat|)^{-n-1}.
SymbolBound symbol_cz_bound(const ProperKernel& kern, const TemperateWeight& W);

// Operator norm of W B W^{-1} on L^2(nu) by power iteration on the
// adjoint-composed operator.
double l2_norm_estimate(const ProperKernel& kern, const TemperateWeight& W, int iterations = 30,
                        std::uint64_t seed = 1);

struct OperatorScan {
  std::vector<double> param;   // bump width or p
  std::vector<double> value;   // measured quantity per parameter
  double max_value = 0.0;
};

// Weak-type scan: max over lambda and corpus of lambda nu({|Bu|>lambda}) /
// ||u||_L1(nu) for the L2-normalized operator, with L1-normalized bumps of
// the given widths.
OperatorScan weak11_scan(const ProperKernel& kern, const std::vector<double>& widths,
                         std::uint64_t seed = 1);

// max over corpus of ||W B W^{-1} u||_p / ||u||_p for p in (1,2]; the L2
// maximizer from power iteration is appended to the corpus.
OperatorScan lp_scan(const ProperKernel& kern, const std::vector<double>& p_list,
                     const TemperateWeight& W, int corpus_size = 6, std::uint64_t seed = 1);

struct HormanderResult {
  double integral = 0.0;   // quadrature over the truncated annulus
  double tail_bound = 0.0; // analytic bound beyond the truncation
  double c_n = 0.0;        // the dimensional constant
  double C_H = 0.0;        // measured gradient constant
  bool pass = false;       // integral + tail <= c_n * C_H
};

// Checks the cancellation integral int_{|x|>2t} |K(x, Y(x)) - K(x, 0)| dx
// against the dimensional constant; K and Y are arbitrary continuous maps
// with |grad_y K| <= C_H |x-y|^{-n-1} (measured by sampling; throws
// PreconditionError when that blows up).
HormanderResult hormander_check(
    const std::function<double(double, double, double, double)>& K, double t,
    const std::function<std::pair<double, double>(double, double)>& Y, int n = 2);

}  // namespace lpends
