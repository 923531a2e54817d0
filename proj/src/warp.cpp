// SPDX-License-Identifier: Apache-2.0
#include "lpends/warp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lpends/errors.hpp"

namespace lpends {

namespace {
constexpr double kConstantCap = 1.0e3;
constexpr int kScanSamples = 4097;
}  // namespace

const char* to_string(WarpKind k) {
  switch (k) {
    case WarpKind::flat: return "flat";
    case WarpKind::conical: return "conical";
    case WarpKind::hyperbolic: return "hyperbolic";
    case WarpKind::custom: return "custom";
  }
  return "?";
}

WarpKind warp_kind_from_string(const std::string& s) {
  if (s == "flat") return WarpKind::flat;
  if (s == "conical") return WarpKind::conical;
  if (s == "hyperbolic") return WarpKind::hyperbolic;
  if (s == "custom") return WarpKind::custom;
  fail(ErrorCode::ConfigError, "unknown warp kind '" + s + "'");
}

// Natural cubic spline of s(r) = log w(r); derivatives of w recovered from
// s', s'', s''' (the spline is piecewise cubic, so s'''' = 0 between knots).
struct Warp::Spline {
  std::vector<double> x, y, m;  // knots, log-values, second derivatives

  double clamp(double r) const { return std::min(std::max(r, x.front()), x.back()); }

  int segment(double r) const {
    auto it = std::upper_bound(x.begin(), x.end(), r);
    int i = static_cast<int>(it - x.begin()) - 1;
    return std::min(std::max(i, 0), static_cast<int>(x.size()) - 2);
  }

  double s(double r, int order) const {
    r = clamp(r);
    int i = segment(r);
    double h = x[i + 1] - x[i], a = (x[i + 1] - r) / h, b = (r - x[i]) / h;
    switch (order) {
      case 0:
        return a * y[i] + b * y[i + 1] +
               ((a * a * a - a) * m[i] + (b * b * b - b) * m[i + 1]) * h * h / 6.0;
      case 1:
        return (y[i + 1] - y[i]) / h +
               ((3 * b * b - 1) * m[i + 1] - (3 * a * a - 1) * m[i]) * h / 6.0;
      case 2:
        return a * m[i] + b * m[i + 1];
      case 3:
        return (m[i + 1] - m[i]) / h;
      default:
        return 0.0;
    }
  }
};

namespace {

std::shared_ptr<const Warp::Spline> build_spline(const std::vector<double>& params) {
  if (params.size() < 6 || params.size() % 2 != 0)
    fail(ErrorCode::InvalidWarp, "custom warp needs at least 3 (r, w) sample pairs");
  auto sp = std::make_shared<Warp::Spline>();
  for (size_t i = 0; i < params.size(); i += 2) {
    double r = params[i], w = params[i + 1];
    if (!(w > 0.0) || !std::isfinite(w)) fail(ErrorCode::InvalidWarp, "nonpositive profile value");
    sp->x.push_back(r);
    sp->y.push_back(std::log(w));
  }
  for (size_t i = 1; i < sp->x.size(); ++i)
    if (!(sp->x[i] > sp->x[i - 1]))
      fail(ErrorCode::InvalidWarp, "custom warp samples must have increasing r");
  // Tridiagonal solve for natural-spline second derivatives.
  int n = static_cast<int>(sp->x.size());
  sp->m.assign(n, 0.0);
  std::vector<double> c(n, 0.0), d(n, 0.0);
  for (int i = 1; i < n - 1; ++i) {
    double h0 = sp->x[i] - sp->x[i - 1], h1 = sp->x[i + 1] - sp->x[i];
    double rhs = 6.0 * ((sp->y[i + 1] - sp->y[i]) / h1 - (sp->y[i] - sp->y[i - 1]) / h0);
    double diag = 2.0 * (h0 + h1) - h0 * c[i - 1];
    c[i] = h1 / diag;
    d[i] = (rhs - h0 * d[i - 1]) / diag;
  }
  for (int i = n - 2; i >= 1; --i) sp->m[i] = d[i] - c[i] * sp->m[i + 1];
  return sp;
}

}  // namespace

double Warp::eval(double r) const {
  switch (kind_) {
    case WarpKind::flat: return 1.0;
    case WarpKind::conical: return 1.0 / r;
    case WarpKind::hyperbolic: return std::exp(-r);
    case WarpKind::custom: return std::exp(spline_->s(r, 0));
  }
  return 1.0;
}

double Warp::derivative(double r, int order) const {
  if (order == 0) return eval(r);
  switch (kind_) {
    case WarpKind::flat:
      return 0.0;
    case WarpKind::conical: {
      double v = 1.0;
      for (int k = 1; k <= order; ++k) v *= -static_cast<double>(k);
      return v * std::pow(r, -(order + 1));
    }
    case WarpKind::hyperbolic:
      return (order % 2 == 0 ? 1.0 : -1.0) * std::exp(-r);
    case WarpKind::custom: {
      // w = e^s: chain rule through order 3; the spline has no information
      // beyond the third derivative.
      double w = std::exp(spline_->s(r, 0));
      double s1 = spline_->s(r, 1), s2 = spline_->s(r, 2), s3 = spline_->s(r, 3);
      switch (order) {
        case 1: return s1 * w;
        case 2: return (s2 + s1 * s1) * w;
        case 3: return (s3 + 3.0 * s2 * s1 + s1 * s1 * s1) * w;
        default: return 0.0;
      }
    }
  }
  return 0.0;
}

namespace {

struct MeasuredConstants {
  double c_bound, c_diag, c_der, c_exp;
  std::vector<double> per_order;
};

// Smallest C with w(r) >= C^-1 e^{-C r} at a single point; -log C - C r = log w
// is strictly decreasing in C, so bisection applies.
double exp_bound_constant(double r, double w) {
  double target = std::log(w);
  auto f = [&](double c) { return -std::log(c) - c * r - target; };
  double lo = 1e-9, hi = 1e9;
  if (f(lo) < 0.0) return lo;
  if (f(hi) > 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

MeasuredConstants measure_constants(const std::function<double(double)>& eval,
                                    const std::function<double(double, int)>& deriv,
                                    Interval range, int k_max) {
  MeasuredConstants out{0.0, 1.0, 0.0, 0.0, std::vector<double>(std::max(k_max, 0), 0.0)};
  const int n = kScanSamples;
  const double h = range.length() / (n - 1);
  std::vector<double> vals(n);
  for (int i = 0; i < n; ++i) {
    double r = range.lo + i * h;
    double v = eval(r);
    if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorCode::InvalidWarp, "nonpositive profile value");
    vals[i] = v;
    out.c_bound = std::max(out.c_bound, v);
    out.c_exp = std::max(out.c_exp, exp_bound_constant(std::max(r, 0.0), v));
    for (int k = 1; k <= k_max; ++k) {
      double d = std::abs(deriv(r, k)) / v;
      out.per_order[k - 1] = std::max(out.per_order[k - 1], d);
      out.c_der = std::max(out.c_der, d);
    }
  }
  const int window = std::max(1, static_cast<int>(std::floor(1.0 / h)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= std::min(i + window, n - 1); ++j) {
      double ratio = vals[i] / vals[j];
      out.c_diag = std::max({out.c_diag, ratio, 1.0 / ratio});
    }
  return out;
}

MeasuredConstants measure_constants(const Warp& w, Interval range, int k_max) {
  return measure_constants([&](double r) { return w(r); },
                           [&](double r, int k) { return w.derivative(r, k); }, range, k_max);
}

// Central finite differences for profiles given only as a function.
double fd_derivative(const std::function<double(double)>& f, double r, int order, double h) {
  switch (order) {
    case 1: return (f(r + h) - f(r - h)) / (2 * h);
    case 2: return (f(r + h) - 2 * f(r) + f(r - h)) / (h * h);
    case 3: return (f(r + 2 * h) - 2 * f(r + h) + 2 * f(r - h) - f(r - 2 * h)) / (2 * h * h * h);
    default: {
      // higher orders by recursion on second differences
      auto g = [&](double x) { return fd_derivative(f, x, order - 2, h); };
      return (g(r + h) - 2 * g(r) + g(r - h)) / (h * h);
    }
  }
}

WarpReport report_from(const MeasuredConstants& c) {
  WarpReport rep;
  rep.c_bound = c.c_bound;
  rep.c_diag = c.c_diag;
  rep.c_der = c.c_der;
  rep.c_exp = c.c_exp;
  rep.c_der_per_order = c.per_order;
  rep.pass_bound = c.c_bound <= kConstantCap;
  rep.pass_diag = c.c_diag <= kConstantCap;
  rep.pass_der = c.c_der <= kConstantCap;
  rep.pass_exp = c.c_exp <= kConstantCap;
  return rep;
}

}  // namespace

Warp make_warp(WarpKind kind, const std::vector<double>& params, Interval range, int k_max) {
  Warp w;
  w.kind_ = kind;
  w.k_max_ = k_max;
  if (kind == WarpKind::custom) {
    w.spline_ = build_spline(params);
    range = {w.spline_->x.front(), w.spline_->x.back()};
  }
  if (!(range.hi > range.lo)) fail(ErrorCode::InvalidWarp, "empty sample range");
  if (kind == WarpKind::conical && range.lo <= 0.0)
    fail(ErrorCode::InvalidWarp, "conical profile needs a positive inner radius");
  w.range_ = range;
  auto c = measure_constants(w, range, k_max);
  w.c_bound_ = c.c_bound;
  w.c_diag_ = c.c_diag;
  w.c_der_ = c.c_der;
  w.c_exp_ = c.c_exp;
  if (kind == WarpKind::custom && c.c_diag > kConstantCap)
    fail(ErrorCode::InvalidWarp, "profile ratio over unit separation exceeds 1e3");
  return w;
}

WarpReport verify_warp(const Warp& w, Interval r_range, int k_max) {
  return report_from(measure_constants(w, r_range, k_max));
}

WarpReport verify_profile(const std::function<double(double)>& w, Interval r_range, int k_max) {
  const double h = 1e-3;
  return report_from(measure_constants(
      w, [&](double r, int k) { return fd_derivative(w, r, k, h); }, r_range, k_max));
}

}  // namespace lpends
