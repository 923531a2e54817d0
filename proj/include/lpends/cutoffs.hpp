// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

namespace lpends {

enum class CutoffName { psi, phi0, phi, phi1 };

// Smooth cutoffs realizing the dyadic partition of unity.
//
//   psi : [0,inf) -> [0,1], exactly 1 on [0,1], exactly 0 on [2,inf),
//         monotone nonincreasing;
//   phi0 = psi;
//   phi(x)  = psi(x/2) - psi(x), supported in [1,4];
//   phi1(x) = psi(x/4) * (1 - psi(2x)), = 1 on [1,4], supported in [1/2,8].
//
// With these conventions phi0(x) + sum_{k=0..K} phi(2^-k x) telescopes to
// psi(2^-(K+1) x) exactly, and annuli two octaves apart have disjoint
// supports.
class DyadicCutoffs {
 public:
  explicit DyadicCutoffs(int smoothness = 1);

  double psi(double x) const;
  double phi0(double x) const { return psi(x); }
  double phi(double x) const;
  double phi1(double x) const;

  // Throws DomainError for x < 0.
  double eval(CutoffName which, double x) const;

  // Spectral multiplier of the k-th dyadic block: phi0 for k = 0 and
  // x -> phi(2^{-(k-1)} x) for k >= 1.
  double block(int k, double x) const;

  int smoothness() const { return smoothness_; }

 private:
  int smoothness_;
  struct Table;
  std::shared_ptr<const Table> table_;
};

inline DyadicCutoffs build_cutoffs(int smoothness) { return DyadicCutoffs(smoothness); }

// Max over the grid of |1 - phi0(x) - sum_{k<=K} phi(2^-k x)|, counting only
// points with x <= 2^(K+1); points beyond are reported separately.
struct PartitionResidual {
  double residual = 0.0;       // over covered grid points
  double beyond_range = 0.0;   // max |1 - partial sum| over flagged points
  int flagged = 0;             // grid points past 2^(K+1)
};
PartitionResidual partition_residual(const DyadicCutoffs& c, const std::vector<double>& grid,
                                     int K);

}  // namespace lpends
