// SPDX-License-Identifier: Apache-2.0
#include "lpends/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpends/errors.hpp"
#include "lpends/fft.hpp"
#include "lpends/rng.hpp"

namespace lpends {

ModeSpectrum eigendecompose_mode(const SymmetricOperator& op) {
  Eigen::Map<const Eigen::VectorXd> diag(op.diag.data(), op.N);
  Eigen::Map<const Eigen::VectorXd> off(op.offdiag.data(), op.N - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    fail(ErrorCode::EigenFailure, "tridiagonal solver failed at mode " + std::to_string(op.mode));

  ModeSpectrum ms;
  ms.musq = static_cast<double>(op.mode) * op.mode;
  ms.lambda = solver.eigenvalues();
  ms.basis = solver.eigenvectors();

  // residual check ||T q - lambda q|| <= 1e-8 ||q||
  double scale = std::max(1.0, ms.lambda.cwiseAbs().maxCoeff());
  for (int i = 0; i < op.N; ++i) {
    double res = 0.0;
    for (int j = 0; j < op.N; ++j) {
      double acc = op.diag[j] * ms.basis(j, i) - ms.lambda(i) * ms.basis(j, i);
      if (j > 0) acc += op.offdiag[j - 1] * ms.basis(j - 1, i);
      if (j + 1 < op.N) acc += op.offdiag[j] * ms.basis(j + 1, i);
      res += acc * acc;
    }
    if (std::sqrt(res) > 1e-8 * scale)
      fail(ErrorCode::EigenFailure, "eigenpair residual too large at mode " +
                                        std::to_string(op.mode));
  }

  // Rescale columns to be orthonormal in the variant's radial inner product.
  for (int j = 0; j < op.N; ++j) {
    double s = 1.0 / std::sqrt(op.radial_weight[j] * op.dr);
    ms.basis.row(j) *= s;
  }
  return ms;
}

Spectrum::Spectrum(const ModelEnd& end, Variant variant) : end_(end), variant_(variant) {
  const int half = end.mode_count / 2;
  slot_of_abs_mode_.assign(half + 1, -1);
  modes_.reserve(half + 1);
  for (int m = 0; m <= half; ++m) {
    SymmetricOperator op = assemble_operator_musq(end, variant, static_cast<double>(m) * m);
    op.mode = m;
    modes_.push_back(eigendecompose_mode(op));
    slot_of_abs_mode_[m] = static_cast<int>(modes_.size()) - 1;
    lambda_max_ = std::max(lambda_max_, modes_.back().lambda.maxCoeff());
  }
  omega_.resize(end.N);
  for (int j = 0; j < end.N; ++j)
    omega_[j] = (variant == Variant::plain ? end.rho[j] : 1.0) * end.dr;
}

int Spectrum::auto_K() const {
  int K = 0;
  while (std::ldexp(1.0, K) < lambda_max_) ++K;
  return K;
}

const ModeSpectrum& Spectrum::mode(int m) const {
  int a = std::abs(m);
  if (a >= static_cast<int>(slot_of_abs_mode_.size()) || slot_of_abs_mode_[a] < 0)
    fail(ErrorCode::InvalidMode, "mode " + std::to_string(m) + " out of range");
  return modes_[slot_of_abs_mode_[a]];
}

Eigen::MatrixXcd Spectrum::angular_analysis(const GridFunction& u) const {
  const int N = end_.N, mc = end_.mode_count;
  std::vector<std::complex<double>> buf(u.v);
  fft::fft_rows(buf.data(), N, mc, -1);
  Eigen::MatrixXcd hat(N, mc);
  const double theta0 = end_.theta[0];
  for (int bin = 0; bin < mc; ++bin) {
    int m = mode_of_bin(bin);
    std::complex<double> phase = std::polar(1.0 / mc, -m * theta0);
    for (int j = 0; j < N; ++j) hat(j, bin) = buf[static_cast<size_t>(j) * mc + bin] * phase;
  }
  return hat;
}

GridFunction Spectrum::angular_synthesis(const Eigen::MatrixXcd& hat) const {
  const int N = end_.N, mc = end_.mode_count;
  GridFunction u(N, mc);
  const double theta0 = end_.theta[0];
  for (int bin = 0; bin < mc; ++bin) {
    int m = mode_of_bin(bin);
    std::complex<double> phase = std::polar(1.0, m * theta0);
    for (int j = 0; j < N; ++j) u.v[static_cast<size_t>(j) * mc + bin] = hat(j, bin) * phase;
  }
  fft::fft_rows(u.v.data(), N, mc, +1);
  return u;
}

Eigen::MatrixXcd Spectrum::coefficients(const Eigen::MatrixXcd& hat) const {
  const int N = end_.N, mc = end_.mode_count;
  Eigen::MatrixXcd coeff(N, mc);
  Eigen::VectorXd wre(N), wim(N);
  for (int bin = 0; bin < mc; ++bin) {
    const ModeSpectrum& ms = modes_[slot_of_abs_mode_[std::abs(mode_of_bin(bin))]];
    for (int j = 0; j < N; ++j) {
      wre(j) = hat(j, bin).real() * omega_[j];
      wim(j) = hat(j, bin).imag() * omega_[j];
    }
    Eigen::VectorXd cre = ms.basis.transpose() * wre;
    Eigen::VectorXd cim = ms.basis.transpose() * wim;
    for (int i = 0; i < N; ++i) coeff(i, bin) = {cre(i), cim(i)};
  }
  return coeff;
}

GridFunction Spectrum::apply(const std::function<std::complex<double>(double)>& f,
                             const GridFunction& u) const {
  const int N = end_.N, mc = end_.mode_count;
  Eigen::MatrixXcd hat = angular_analysis(u);
  Eigen::MatrixXcd coeff = coefficients(hat);
  Eigen::MatrixXcd out(N, mc);
  Eigen::VectorXd re(N), im(N);
  for (int bin = 0; bin < mc; ++bin) {
    const ModeSpectrum& ms = modes_[slot_of_abs_mode_[std::abs(mode_of_bin(bin))]];
    for (int i = 0; i < N; ++i) {
      std::complex<double> z = f(ms.lambda(i)) * coeff(i, bin);
      re(i) = z.real();
      im(i) = z.imag();
    }
    Eigen::VectorXd ore = ms.basis * re;
    Eigen::VectorXd oim = ms.basis * im;
    for (int j = 0; j < N; ++j) out(j, bin) = {ore(j), oim(j)};
  }
  return angular_synthesis(out);
}

GridFunction apply_spectral(const std::function<std::complex<double>(double)>& f,
                            const Spectrum& s, const GridFunction& u) {
  return s.apply(f, u);
}

GridFunction dyadic_block(const DyadicCutoffs& c, const Spectrum& s, const GridFunction& u,
                          int k) {
  if (k < 0) fail(ErrorCode::DomainError, "block index must be >= 0");
  return s.apply([&](double x) { return std::complex<double>(c.block(k, x), 0.0); }, u);
}

DyadicBlockSet build_blocks(const DyadicCutoffs& c, const Spectrum& s, const GridFunction& u,
                            int K) {
  if (K < 0) K = s.auto_K();
  DyadicBlockSet set;
  set.K = K;
  set.variant = s.variant();
  set.truncated = std::ldexp(1.0, K + 1) < s.lambda_max();

  const int N = s.end().N, mc = s.end().mode_count;
  Eigen::MatrixXcd hat = s.angular_analysis(u);
  Eigen::MatrixXcd coeff = s.coefficients(hat);
  set.blocks.reserve(K + 1);
  Eigen::VectorXd re(N), im(N);
  for (int k = 0; k <= K; ++k) {
    Eigen::MatrixXcd out(N, mc);
    for (int bin = 0; bin < mc; ++bin) {
      const ModeSpectrum& ms = s.mode(s.mode_of_bin(bin));
      for (int i = 0; i < N; ++i) {
        double f = c.block(k, ms.lambda(i));
        re(i) = f * coeff(i, bin).real();
        im(i) = f * coeff(i, bin).imag();
      }
      Eigen::VectorXd ore = ms.basis * re;
      Eigen::VectorXd oim = ms.basis * im;
      for (int j = 0; j < N; ++j) out(j, bin) = {ore(j), oim(j)};
    }
    set.blocks.push_back(s.angular_synthesis(out));
  }
  return set;
}

GridFunction square_function(const DyadicCutoffs& c, const Spectrum& s, const GridFunction& u,
                             int K) {
  DyadicBlockSet set = build_blocks(c, s, u, K);
  GridFunction out(u.N, u.mc);
  for (size_t i = 0; i < out.v.size(); ++i) {
    double acc = 0.0;
    for (const auto& b : set.blocks) acc += std::norm(b.v[i]);
    out.v[i] = std::sqrt(acc);
  }
  return out;
}

double almost_orthogonality_check(const DyadicCutoffs& c, const Spectrum& s, int k1, int k2) {
  if (k1 < 1 || k2 < 1) fail(ErrorCode::DomainError, "annulus block indices must be >= 1");
  double sup = 0.0;
  for (int sl = 0; sl < s.slots(); ++sl) {
    const auto& lam = s.slot(sl).lambda;
    for (int i = 0; i < lam.size(); ++i)
      sup = std::max(sup, std::abs(c.block(k1, lam(i)) * c.block(k2, lam(i))));
  }
  return sup;
}

std::vector<GridFunction> make_corpus(const Spectrum& s, int count, std::uint64_t seed,
                                      std::string_view tag) {
  const ModelEnd& end = s.end();
  const int N = end.N, mc = end.mode_count;
  std::vector<GridFunction> corpus;
  corpus.reserve(count);
  for (int idx = 0; idx < count; ++idx) {
    RngStream rng(seed, tag, static_cast<std::uint64_t>(idx));
    GridFunction u(N, mc);
    switch (idx % 3) {
      case 0: {
        // random combination of low eigenvectors over a few modes
        Eigen::MatrixXcd hat = Eigen::MatrixXcd::Zero(N, mc);
        int picks = 3;
        for (int t = 0; t < picks; ++t) {
          int m = static_cast<int>(rng.next_int(-mc / 4, mc / 4));
          int bin = m >= 0 ? m : m + mc;
          const ModeSpectrum& ms = s.mode(m);
          int levels = std::min(24, N);
          for (int q = 0; q < 8; ++q) {
            int i = static_cast<int>(rng.next_int(0, levels - 1));
            std::complex<double> cfe = rng.complex_gaussian();
            for (int j = 0; j < N; ++j) hat(j, bin) += cfe * ms.basis(j, i);
          }
        }
        u = s.angular_synthesis(hat);
        break;
      }
      case 1: {
        // Gaussian bump with a single angular frequency
        double r0 = rng.uniform(end.R + 0.15 * (end.R_max - end.R),
                                end.R_max - 0.15 * (end.R_max - end.R));
        double sigma = rng.uniform(2.0 * end.dr, 0.2 * (end.R_max - end.R));
        int m0 = static_cast<int>(rng.next_int(-mc / 4, mc / 4));
        for (int j = 0; j < N; ++j) {
          double g = std::exp(-0.5 * std::pow((end.r[j] - r0) / sigma, 2));
          for (int l = 0; l < mc; ++l)
            u.at(j, l) = g * std::polar(1.0, m0 * end.theta[l]);
        }
        break;
      }
      default: {
        // radially modulated bump stressing the high-frequency tail
        double r0 = rng.uniform(end.R + 0.2 * (end.R_max - end.R),
                                end.R_max - 0.2 * (end.R_max - end.R));
        double sigma = rng.uniform(4.0 * end.dr, 0.25 * (end.R_max - end.R));
        double omega = rng.uniform(4.0, 0.5 / end.dr);
        int m0 = static_cast<int>(rng.next_int(-mc / 3, mc / 3));
        for (int j = 0; j < N; ++j) {
          double g = std::exp(-0.5 * std::pow((end.r[j] - r0) / sigma, 2)) *
                     std::cos(omega * (end.r[j] - r0));
          for (int l = 0; l < mc; ++l)
            u.at(j, l) = g * std::polar(1.0, m0 * end.theta[l]);
        }
        break;
      }
    }
    double nrm = norm_l2(u, s.measure(), end);
    if (nrm > 0.0)
      for (auto& z : u.v) z /= nrm;
    corpus.push_back(std::move(u));
  }
  return corpus;
}

RatioStats equivalence_stats(const DyadicCutoffs& c, const Spectrum& s,
                             const std::vector<GridFunction>& corpus, double p,
                             const TemperateWeight& W) {
  if (corpus.empty()) fail(ErrorCode::DomainError, "empty corpus");
  RatioStats out{std::numeric_limits<double>::infinity(), 0.0, 0};
  const Measure mu = s.measure();
  for (const auto& u : corpus) {
    double denom = weighted_norm(u, p, W, mu, s.end());
    if (denom == 0.0) {
      ++out.skipped;
      continue;
    }
    GridFunction sq = square_function(c, s, u);
    double num = weighted_norm(sq, p, W, mu, s.end());
    double ratio = num / denom;
    out.ratio_min = std::min(out.ratio_min, ratio);
    out.ratio_max = std::max(out.ratio_max, ratio);
  }
  return out;
}

BoundStats remainder_stats(const DyadicCutoffs& c, const Spectrum& s,
                           const std::vector<GridFunction>& corpus, double p, int M) {
  if (!(p >= 2.0)) fail(ErrorCode::DomainError, "remainder bound requires p >= 2");
  BoundStats out;
  const Measure mu = s.measure();
  for (const auto& u : corpus) {
    if (u.empty_or_zero()) {
      ++out.skipped;
      continue;
    }
    double lhs = norm_lp(u, p, mu, s.end());
    GridFunction sq = square_function(c, s, u);
    GridFunction res = s.apply(
        [M](double lam) {
          return std::pow(std::complex<double>(lam, 1.0), -static_cast<double>(M));
        },
        u);
    double rhs = norm_lp(sq, p, mu, s.end()) + norm_l2(res, mu, s.end());
    double ratio = lhs / rhs;
    if (ratio > out.ratio_max) out = {ratio, lhs, rhs, out.skipped};
  }
  return out;
}

BoundStats block_sum_stats(const DyadicCutoffs& c, const Spectrum& s,
                           const std::vector<GridFunction>& corpus, double p) {
  if (!(p >= 2.0)) fail(ErrorCode::DomainError, "block sum bound requires p >= 2");
  BoundStats out;
  const Measure mu = s.measure();
  for (const auto& u : corpus) {
    if (u.empty_or_zero()) {
      ++out.skipped;
      continue;
    }
    DyadicBlockSet set = build_blocks(c, s, u);
    double lhs = norm_lp(u, p, mu, s.end());
    double sum = 0.0;
    for (int k = 1; k <= set.K; ++k) {
      double nk = norm_lp(set.blocks[k], p, mu, s.end());
      sum += nk * nk;
    }
    double tail = s.variant() == Variant::modified ? norm_lp(set.blocks[0], p, mu, s.end())
                                                   : norm_l2(u, mu, s.end());
    double rhs = std::sqrt(sum) + tail;
    double ratio = lhs / rhs;
    if (ratio > out.ratio_max) out = {ratio, lhs, rhs, out.skipped};
  }
  return out;
}

void check_admissible(int n, double p) {
  double gap = 0.5 * n - n / p;
  if (!(gap >= 0.0 && gap <= 1.0))
    fail(ErrorCode::AdmissibilityError,
         "pair (n, p) = (" + std::to_string(n) + ", " + std::to_string(p) + ") not admissible");
}

BoundStats localization_stats(const DyadicCutoffs& c, const Spectrum& s,
                              const std::vector<GridFunction>& corpus, double p,
                              const std::vector<double>& chi) {
  check_admissible(s.end().n, p);
  BoundStats out;
  const Measure mu = s.measure();
  const int N = s.end().N, mc = s.end().mode_count;
  auto apply_one_minus_chi = [&](const GridFunction& g) {
    GridFunction h(N, mc);
    for (int j = 0; j < N; ++j)
      for (int l = 0; l < mc; ++l) h.at(j, l) = (1.0 - chi[j]) * g.at(j, l);
    return h;
  };
  for (const auto& u : corpus) {
    if (u.empty_or_zero()) {
      ++out.skipped;
      continue;
    }
    DyadicBlockSet set = build_blocks(c, s, u);
    double lhs = norm_lp(apply_one_minus_chi(u), p, mu, s.end());
    double sum = 0.0;
    for (int k = 0; k <= set.K; ++k) {
      double nk = norm_lp(apply_one_minus_chi(set.blocks[k]), p, mu, s.end());
      sum += nk * nk;
    }
    double rhs = std::sqrt(sum) + norm_l2(u, mu, s.end());
    double ratio = lhs / rhs;
    if (ratio > out.ratio_max) out = {ratio, lhs, rhs, out.skipped};
  }
  return out;
}

CommutatorScan commutator_order(const DyadicCutoffs& c, const Spectrum& s,
                                const std::vector<double>& chi, const std::vector<double>& h_list,
                                int corpus_size, std::uint64_t seed) {
  const ModelEnd& end = s.end();
  const int N = end.N, mc = end.mode_count;
  CommutatorScan scan;
  auto mult_chi = [&](const GridFunction& g) {
    GridFunction out(N, mc);
    for (int j = 0; j < N; ++j)
      for (int l = 0; l < mc; ++l) out.at(j, l) = chi[j] * g.at(j, l);
    return out;
  };
  std::vector<double> logs_h, logs_n;
  for (size_t hi = 0; hi < h_list.size(); ++hi) {
    double h = h_list[hi];
    double band_lo = 0.5 / (h * h), band_hi = 8.0 / (h * h);
    bool usable = 4.0 / (h * h) <= s.lambda_max();
    double worst = 0.0;
    if (usable) {
      auto f = [&](double lam) {
        return std::complex<double>(c.phi(h * h * lam), 0.0);
      };
      for (int idx = 0; idx < corpus_size; ++idx) {
        RngStream rng(seed, "commutator", (static_cast<std::uint64_t>(hi) << 32) | idx);
        // band-limited noise so the probe has energy where phi(h^2 P) lives
        Eigen::MatrixXcd hat = Eigen::MatrixXcd::Zero(N, mc);
        for (int bin = 0; bin < mc; ++bin) {
          const ModeSpectrum& ms = s.mode(s.mode_of_bin(bin));
          Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(N);
          bool any = false;
          for (int i = 0; i < N; ++i)
            if (ms.lambda(i) >= band_lo && ms.lambda(i) <= band_hi) {
              coeff(i) = rng.complex_gaussian();
              any = true;
            }
          if (!any) continue;
          Eigen::VectorXd re = ms.basis * coeff.real();
          Eigen::VectorXd im = ms.basis * coeff.imag();
          for (int j = 0; j < N; ++j) hat(j, bin) = {re(j), im(j)};
        }
        GridFunction u = s.angular_synthesis(hat);
        double nu = norm_l2(u, s.measure(), end);
        if (nu == 0.0) continue;
        GridFunction a = s.apply(f, mult_chi(u));
        GridFunction b = mult_chi(s.apply(f, u));
        for (size_t t = 0; t < a.v.size(); ++t) a.v[t] -= b.v[t];
        worst = std::max(worst, norm_l2(a, s.measure(), end) / nu);
      }
    }
    scan.h.push_back(h);
    scan.norm.push_back(worst);
    scan.used.push_back(usable && worst > 0.0);
    if (usable && worst > 0.0) {
      logs_h.push_back(std::log(h));
      logs_n.push_back(std::log(worst));
    }
  }
  // least-squares slope of log norm against log h
  if (logs_h.size() >= 2) {
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < logs_h.size(); ++i) {
      mx += logs_h[i];
      my += logs_n[i];
    }
    mx /= logs_h.size();
    my /= logs_n.size();
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < logs_h.size(); ++i) {
      num += (logs_h[i] - mx) * (logs_n[i] - my);
      den += (logs_h[i] - mx) * (logs_h[i] - mx);
    }
    scan.slope = num / den;
  }
  return scan;
}

}  // namespace lpends
