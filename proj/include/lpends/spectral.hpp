// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string_view>
#include <vector>

#include "lpends/cutoffs.hpp"
#include "lpends/grid.hpp"
#include "lpends/operators.hpp"
#include "lpends/weight.hpp"

namespace lpends {

// Eigendecomposition of one angular mode: eigenvalues ascending, basis
// columns orthonormal in the variant's radial inner product.
struct ModeSpectrum {
  double musq = 0.0;
  Eigen::VectorXd lambda;
  Eigen::MatrixXd basis;
};

// Throws EigenFailure when the tridiagonal solver fails or an eigenpair
// residual exceeds 1e-8.
ModeSpectrum eigendecompose_mode(const SymmetricOperator& op);

// Exact functional calculus for the discretized end: per-mode
// eigendecompositions assembled across angular modes by Fourier synthesis.
class Spectrum {
 public:
  Spectrum(const ModelEnd& end, Variant variant);

  const ModelEnd& end() const { return end_; }
  Variant variant() const { return variant_; }
  Measure measure() const { return measure_of(variant_); }
  double lambda_max() const { return lambda_max_; }
  // Least K with 2^K >= lambda_max, making the dyadic sum reconstruct exactly.
  int auto_K() const;

  const ModeSpectrum& mode(int m) const;                 // signed mode
  const ModeSpectrum& slot(int s) const { return modes_[s]; }
  int slots() const { return static_cast<int>(modes_.size()); }
  int mode_of_bin(int bin) const { return bin < end_.mode_count / 2 ? bin : bin - end_.mode_count; }

  // Angular transforms between node values and per-mode lines (bins in FFT
  // order).
  Eigen::MatrixXcd angular_analysis(const GridFunction& u) const;
  GridFunction angular_synthesis(const Eigen::MatrixXcd& hat) const;

  // Radial eigen-coefficients per bin; column `bin` holds <u_bin, v_i>.
  Eigen::MatrixXcd coefficients(const Eigen::MatrixXcd& hat) const;

  GridFunction apply(const std::function<std::complex<double>(double)>& f,
                     const GridFunction& u) const;

 private:
  ModelEnd end_;
  Variant variant_;
  std::vector<ModeSpectrum> modes_;     // one slot per distinct m^2
  std::vector<int> slot_of_abs_mode_;   // |m| -> slot
  std::vector<double> omega_;           // radial measure weights (incl. dr)
  double lambda_max_ = 0.0;
};

inline Spectrum eigendecompose(const ModelEnd& end, Variant variant) {
  return Spectrum(end, variant);
}

GridFunction apply_spectral(const std::function<std::complex<double>(double)>& f,
                            const Spectrum& s, const GridFunction& u);

// A_0 = phi0(P), A_k = phi(2^{-(k-1)} P) for k >= 1.
GridFunction dyadic_block(const DyadicCutoffs& c, const Spectrum& s, const GridFunction& u, int k);

struct DyadicBlockSet {
  int K = 0;
  Variant variant = Variant::plain;
  bool truncated = false;  // 2^(K+1) < lambda_max
  std::vector<GridFunction> blocks;
};

// K < 0 selects auto_K().
DyadicBlockSet build_blocks(const DyadicCutoffs& c, const Spectrum& s, const GridFunction& u,
                            int K = -1);

// Pointwise (sum_k |A_k u|^2)^(1/2); real-valued.
GridFunction square_function(const DyadicCutoffs& c, const Spectrum& s, const GridFunction& u,
                             int K = -1);

// Spectral sup of |phi_{k1} phi_{k2}|; exactly zero for |k1 - k2| >= 2.
double almost_orthogonality_check(const DyadicCutoffs& c, const Spectrum& s, int k1, int k2);

// Seeded corpus mixing random eigenvector combinations, Gaussian bumps and
// high-frequency-modulated bumps; members have unit L^2 norm in the variant's
// measure.
std::vector<GridFunction> make_corpus(const Spectrum& s, int count, std::uint64_t seed,
                                      std::string_view tag);

struct RatioStats {
  double ratio_min = 0.0, ratio_max = 0.0;
  int skipped = 0;  // zero-norm members
};

// min/max over the corpus of ||W S_P u||_p / ||W u||_p in the variant measure.
RatioStats equivalence_stats(const DyadicCutoffs& c, const Spectrum& s,
                             const std::vector<GridFunction>& corpus, double p,
                             const TemperateWeight& W);

struct BoundStats {
  double ratio_max = 0.0;
  double lhs_at_max = 0.0, rhs_at_max = 0.0;
  int skipped = 0;
};

// max over corpus of ||u||_p / (||S_P u||_p + ||(P+i)^{-M} u||_2), plain
// variant measure; requires p >= 2.
BoundStats remainder_stats(const DyadicCutoffs& c, const Spectrum& s,
                           const std::vector<GridFunction>& corpus, double p, int M);

// max over corpus of ||u||_p / rhs where rhs carries the block l^2 sum plus
// the variant's tail term (low block in dtildeg, L^2 norm in dg).
BoundStats block_sum_stats(const DyadicCutoffs& c, const Spectrum& s,
                           const std::vector<GridFunction>& corpus, double p);

// Throws AdmissibilityError unless 0 <= n/2 - n/p <= 1.
void check_admissible(int n, double p);

// max over corpus of ||(1-chi)u||_p / ((sum_k ||(1-chi)A_k u||_p^2)^(1/2) + ||u||_2),
// plain variant; chi is a radial cutoff sampled on the grid.
BoundStats localization_stats(const DyadicCutoffs& c, const Spectrum& s,
                              const std::vector<GridFunction>& corpus, double p,
                              const std::vector<double>& chi);

struct CommutatorScan {
  std::vector<double> h;
  std::vector<double> norm;   // max over corpus of ||[phi(h^2 P), chi]u||_2 / ||u||_2
  std::vector<bool> used;     // false when the band exceeds the resolved spectrum
  double slope = 0.0;         // log-log fit over used points
};

// Probes the commutator scaling law with band-limited seeded corpora per h.
CommutatorScan commutator_order(const DyadicCutoffs& c, const Spectrum& s,
                                const std::vector<double>& chi, const std::vector<double>& h_list,
                                int corpus_size, std::uint64_t seed);

}  // namespace lpends
