// SPDX-License-Identifier: Apache-2.0
#include "lpends/weight.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "lpends/errors.hpp"

namespace lpends {

namespace {

// Normalized bump on (-1,1) used for mollification.
double bump(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  return std::exp(-1.0 / (1.0 - s * s));
}

double bump_mass() {
  static const double mass = [] {
    // composite Simpson on a dense grid; the integrand is smooth and tiny at
    // the endpoints
    const int n = 1 << 14;
    double h = 2.0 / n, acc = 0.0;
    for (int i = 0; i < n; ++i) {
      double a = -1.0 + i * h;
      acc += (bump(a) + 4.0 * bump(a + 0.5 * h) + bump(a + h)) * h / 6.0;
    }
    return acc;
  }();
  return mass;
}

// 64-point Gauss-Legendre nodes/weights on (-1,1), generated once by Newton
// iteration on the Legendre polynomial.
struct GaussLegendre {
  std::vector<double> x, w;
  explicit GaussLegendre(int n) : x(n), w(n) {
    for (int i = 0; i < n; ++i) {
      double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = t;
        for (int k = 2; k <= n; ++k) {
          double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        double dp = n * (t * p1 - p0) / (t * t - 1.0);
        double dt = p1 / dp;
        t -= dt;
        if (std::abs(dt) < 1e-15) break;
      }
      x[i] = t;
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

const GaussLegendre& gl64() {
  static const GaussLegendre g(64);
  return g;
}

}  // namespace

const char* to_string(WeightKind k) {
  switch (k) {
    case WeightKind::constant: return "constant";
    case WeightKind::polynomial: return "polynomial";
    case WeightKind::warp_power: return "warp_power";
  }
  return "?";
}

std::string TemperateWeight::label() const {
  switch (kind_) {
    case WeightKind::constant: return "1";
    case WeightKind::polynomial: return "poly" + std::to_string(param_);
    case WeightKind::warp_power: return "w^" + std::to_string(param_);
  }
  return "?";
}

double TemperateWeight::smoothed(double r) const {
  const auto& g = gl64();
  double mass = bump_mass(), acc = 0.0;
  for (size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * eval_(r - g.x[i]) * bump(g.x[i]);
  return acc / mass;
}

TemperateWeight make_temperate_weight(WeightKind kind, double param, const Warp* warp,
                                      Interval scan_range) {
  TemperateWeight W;
  W.kind_ = kind;
  W.param_ = param;
  switch (kind) {
    case WeightKind::constant:
      W.eval_ = [](double) { return 1.0; };
      break;
    case WeightKind::polynomial:
      W.eval_ = [param](double r) { return std::pow(1.0 + std::abs(r), param); };
      break;
    case WeightKind::warp_power: {
      if (warp == nullptr) fail(ErrorCode::DomainError, "warp_power weight needs a warp");
      Warp w = *warp;
      W.eval_ = [w, param](double r) { return std::pow(w(r), param); };
      // keep the scan inside the warp's evaluable domain for profiles with a
      // singular origin
      if (warp->kind() == WarpKind::conical)
        scan_range.lo = std::max(scan_range.lo, warp->sample_range().lo);
      if (warp->kind() == WarpKind::custom) scan_range = warp->sample_range();
      break;
    }
  }

  // Temperance scan: bucket the maximal log-ratio by separation, fit the
  // exponent against log(1+separation), measure the residual constant.
  const int n = 1537;
  const double h = scan_range.length() / (n - 1);
  std::vector<double> logw(n);
  for (int i = 0; i < n; ++i) {
    double v = W.eval_(scan_range.lo + i * h);
    if (!(v > 0.0) || !std::isfinite(v)) fail(ErrorCode::NotTemperate, "weight not positive/finite");
    logw[i] = std::log(v);
  }
  double m_fit = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = (j - i) * h;
      if (d < 1.0) continue;
      m_fit = std::max(m_fit, std::abs(logw[j] - logw[i]) / std::log1p(d));
    }
  if (!(m_fit <= kTemperanceExponentCap))
    fail(ErrorCode::NotTemperate, "fitted temperance exponent " + std::to_string(m_fit));
  double log_c = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = (j - i) * h;
      log_c = std::max(log_c, std::abs(logw[j] - logw[i]) - m_fit * std::log1p(d));
    }
  W.m_ = m_fit;
  W.c_ = std::exp(log_c);

  // Measured equivalence constant of the mollified companion; stay one unit
  // inside the scan range so the convolution never leaves it.
  double equiv = 1.0;
  for (int i = 0; i < n; i += 16) {
    double r = scan_range.lo + i * h;
    if (r < scan_range.lo + 1.0 || r > scan_range.hi - 1.0) continue;
    double ratio = W.smoothed(r) / W.eval_(r);
    equiv = std::max({equiv, ratio, 1.0 / ratio});
  }
  W.equiv_c_ = equiv;
  return W;
}

}  // namespace lpends
