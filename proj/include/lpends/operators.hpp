// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lpends/grid.hpp"

namespace lpends {

enum class Variant { plain, modified };

inline Measure measure_of(Variant v) { return v == Variant::plain ? Measure::dg : Measure::dtildeg; }

// One angular mode of the radial operator, discretized by conservative finite
// volumes with Dirichlet values at ghost nodes half a cell outside [R, R_max].
//
// The plain variant realizes  L_m u = -w^{n-1} d/dr (w^{1-n} du/dr) + |m|^2 w^2 u,
// symmetric under the w^{1-n} dr inner product.  The modified variant is its
// conjugation by diag(w^{(1-n)/2}), which lands exactly on the symmetric
// tridiagonal reduction; both variants therefore share the same tridiagonal
// (diag, offdiag) and the same eigenvalues down to roundoff.
struct SymmetricOperator {
  Variant variant = Variant::plain;
  int mode = 0;
  int N = 0;
  double dr = 0.0;
  std::vector<double> diag, offdiag;   // symmetric tridiagonal core
  std::vector<double> scale;           // w(r_j)^{(1-n)/2}; plain apply = S^{-1} T S
  std::vector<double> radial_weight;   // measure weight per node (w^{1-n} or 1)

  std::vector<double> apply(const std::vector<double>& u) const;
  double inner(const std::vector<double>& u, const std::vector<double>& v) const;
};

// Throws InvalidMode when |m| >= mode_count / 2.
SymmetricOperator assemble_operator(const ModelEnd& end, Variant variant, int m);

// Assembly keyed by |m|^2, covering the Nyquist bin and flat-torus cross
// sections in higher dimension.
SymmetricOperator assemble_operator_musq(const ModelEnd& end, Variant variant, double musq);

}  // namespace lpends
