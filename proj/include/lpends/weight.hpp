// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>

#include "lpends/warp.hpp"

namespace lpends {

enum class WeightKind { constant, polynomial, warp_power };

const char* to_string(WeightKind k);

// Positive weight W(r) certified temperate by a grid scan: the log-ratio
// |log W(r')/W(r)| is fitted against log(1+|r-r'|), giving the measured pair
// (C, M).  A fitted exponent above kTemperanceExponentCap rejects the weight
// (the scan range is wide enough that exponential weights blow past it while
// polynomial ones stay at their true order).
class TemperateWeight {
 public:
  double operator()(double r) const { return eval_(r); }

  double temperance_C() const { return c_; }
  double temperance_M() const { return m_; }
  WeightKind kind() const { return kind_; }
  double param() const { return param_; }
  std::string label() const;

  // Mollified companion: convolution with the normalized bump supported in
  // (-1,1); equivalent to W within the measured factor smooth_equiv_C.
  double smoothed(double r) const;
  double smooth_equiv_C() const { return equiv_c_; }

 private:
  friend TemperateWeight make_temperate_weight(WeightKind, double, const Warp*, Interval);
  std::function<double(double)> eval_;
  WeightKind kind_ = WeightKind::constant;
  double param_ = 0.0;
  double c_ = 1.0, m_ = 0.0, equiv_c_ = 1.0;
};

inline constexpr double kTemperanceExponentCap = 10.0;

// kind=constant: W = 1 (param ignored).  kind=polynomial: W = (1+|r|)^s with
// s = param.  kind=warp_power: W = w(r)^gamma with gamma = param; requires the
// warp pointer and throws NotTemperate when the scan rejects (e.g. any power
// of the hyperbolic profile).  scan_range defaults to a 96-unit window.
TemperateWeight make_temperate_weight(WeightKind kind, double param = 0.0,
                                      const Warp* warp = nullptr,
                                      Interval scan_range = {0.0, 96.0});

}  // namespace lpends
