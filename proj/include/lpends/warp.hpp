// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lpends {

enum class WarpKind { flat, conical, hyperbolic, custom };

const char* to_string(WarpKind k);
WarpKind warp_kind_from_string(const std::string& s);

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
  double length() const { return hi - lo; }
};

// End profile w(r) > 0 together with the regularity constants measured on a
// dense sample of its range: c_bound (sup w), c_diag (ratio over unit
// separation), c_der (|w^(k)| / w up to k_max) and c_exp (exponential lower
// bound w >= c_exp^-1 e^{-c_exp r}).
class Warp {
 public:
  double operator()(double r) const { return eval(r); }
  double eval(double r) const;
  // k-th derivative; order 0 returns w itself.
  double derivative(double r, int order) const;

  WarpKind kind() const { return kind_; }
  int k_max() const { return k_max_; }
  Interval sample_range() const { return range_; }
  double c_bound() const { return c_bound_; }
  double c_diag() const { return c_diag_; }
  double c_der() const { return c_der_; }
  double c_exp() const { return c_exp_; }

  struct Spline;  // custom-profile interpolant

 private:
  friend Warp make_warp(WarpKind, const std::vector<double>&, Interval, int);

  WarpKind kind_ = WarpKind::flat;
  int k_max_ = 3;
  Interval range_{0.0, 1.0};
  double c_bound_ = 1.0, c_diag_ = 1.0, c_der_ = 0.0, c_exp_ = 1.0;

  // Custom profiles: natural cubic spline of log w over the sample nodes.
  std::shared_ptr<const Spline> spline_;
};

// Builds a warp and measures its constants on a dense grid over `range`.
// For `custom`, params holds interleaved samples {r0, w0, r1, w1, ...}.
// Throws InvalidWarp on nonpositive values or when the unit-separation ratio
// exceeds 1e3 (a profile that cannot satisfy the slow-variation bound).
Warp make_warp(WarpKind kind, const std::vector<double>& params = {},
               Interval range = {0.0, 10.0}, int k_max = 3);

struct WarpReport {
  double c_bound = 0.0, c_diag = 0.0, c_der = 0.0, c_exp = 0.0;
  std::vector<double> c_der_per_order;  // index k-1 holds max |w^(k)|/w
  bool pass_bound = false, pass_diag = false, pass_der = false, pass_exp = false;
  bool pass() const { return pass_bound && pass_diag && pass_der && pass_exp; }
};

// Report-only re-measurement of the four profile inequalities on r_range.
// A constant above 1e3 marks the corresponding inequality as failed.
WarpReport verify_warp(const Warp& w, Interval r_range, int k_max);

// Same report for an arbitrary positive profile; derivatives are taken by
// central finite differences, so profiles that fail construction can still be
// examined.
WarpReport verify_profile(const std::function<double(double)>& w, Interval r_range, int k_max);

}  // namespace lpends
