// Copyright 2026 The cvsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvsep/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace cvsep {
namespace {

std::string describe(double m11, double m22, double m) {
  std::ostringstream os;
  os << "(m11=" << m11 << ", m22=" << m22 << ", m=" << m << ")";
  return os.str();
}

// Bisection on a bracketing interval [lo, hi]; assumes f(lo) and f(hi)
// differ in sign or one of them is zero.
template <typename F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  for (int i = 0; i < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon(); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

PureGaussianParams::PureGaussianParams(double m11, double m22, double m)
    : m11_(m11), m22_(m22), m_(m) {
  if (!std::isfinite(m11) || !std::isfinite(m22) || !std::isfinite(m)) {
    throw DomainError("Gaussian parameters must be finite " + describe(m11, m22, m));
  }
  if (!(m11 > 0.0) || !(m22 > 0.0)) {
    throw DomainError("Gaussian needs m11 > 0 and m22 > 0 " + describe(m11, m22, m));
  }
  if (!(det() > 0.0)) {
    throw DomainError("Gaussian needs det M > 0 " + describe(m11, m22, m));
  }
}

Eigen::Matrix2d PureGaussianParams::matrix() const {
  return (Eigen::Matrix2d() << m11_, m_, m_, m22_).finished();
}

GaussianMixtureParams::GaussianMixtureParams(double alpha, PureGaussianParams m,
                                             PureGaussianParams n)
    : alpha_(alpha), m_(m), n_(n) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw DomainError("mixture weight alpha must lie in [0, 1]");
  }
}

DispersionMatrix pure_covariance(const PureGaussianParams& g) {
  const double d = g.det();
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(4, 4);
  v(0, 0) = g.m11() / 2.0;
  v(2, 2) = g.m22() / 2.0;
  v(0, 2) = v(2, 0) = g.m() / 2.0;
  v(1, 1) = g.m22() / (2.0 * d);
  v(3, 3) = g.m11() / (2.0 * d);
  v(1, 3) = v(3, 1) = -g.m() / (2.0 * d);
  return DispersionMatrix(RealSymMatrix::symmetrize_validate(v));
}

double wigner_value(const PureGaussianParams& g, const Eigen::Vector2d& q,
                    const Eigen::Vector2d& p) {
  const Eigen::Matrix2d m = g.matrix();
  const double exponent = q.dot(m.inverse() * q) + p.dot(m * p);
  return std::exp(-exponent) / (std::numbers::pi * std::numbers::pi);
}

DispersionMatrix mixture_covariance(const GaussianMixtureParams& mix) {
  const double a = mix.alpha();
  const Eigen::MatrixXd v =
      a * pure_covariance(mix.first()).matrix() + (1.0 - a) * pure_covariance(mix.second()).matrix();
  return DispersionMatrix(RealSymMatrix::symmetrize_validate(v));
}

double det_cmix(const GaussianMixtureParams& mix) {
  const double a = mix.alpha();
  const double diff = (mix.first().matrix() - mix.second().matrix()).determinant();
  return a * a * (1.0 - a) * (1.0 - a) * diff * diff /
         (16.0 * mix.first().det() * mix.second().det());
}

double det_cmix_time_reversed(const GaussianMixtureParams& mix) {
  const double a = mix.alpha();
  const PureGaussianParams& m = mix.first();
  const PureGaussianParams& n = mix.second();
  const double q_cross = a * m.m() + (1.0 - a) * n.m();
  const double p_cross = a * m.m() / m.det() + (1.0 - a) * n.m() / n.det();
  return det_cmix(mix) - 0.25 * q_cross * p_cross;
}

double special_case_det(double m11, double m22, double m, double alpha) {
  const PureGaussianParams g(m11, m22, m);
  const double d = g.det();
  const double m2 = m * m;
  const double w = alpha * (1.0 - alpha);
  const double s = 2.0 * alpha - 1.0;
  return m2 * m2 * w * w / (d * d) - m2 * s * s / (4.0 * d);
}

FailureWindow failure_window(double m11, double m22, double m) {
  const PureGaussianParams g(m11, m22, m);
  if (m == 0.0) {
    throw DomainError("failure window needs m != 0 (the state is a product)");
  }
  const double k = g.det() / (m * m);

  // u^2 - s u + 1/16 = 0; the product of the roots is 1/16.
  const double s = 0.5 + k;
  const double disc = s * s - 0.25;
  const double u_big = 0.5 * (s + std::sqrt(std::max(disc, 0.0)));
  const double u_small = 1.0 / (16.0 * u_big);

  auto f = [&](double alpha) { return special_case_det(m11, m22, m, alpha); };

  FailureWindow out;
  for (double u : {u_small, u_big}) {
    const double beta = std::sqrt(u);
    for (double alpha : {0.5 - beta, 0.5 + beta}) {
      if (!(alpha > 0.0 && alpha < 1.0)) continue;
      // Polish inside a small bracket around the analytic root.
      const double h = 1e-6 * std::max(beta, 1e-3);
      const double lo = std::max(alpha - h, 0.0);
      const double hi = std::min(alpha + h, 1.0);
      if ((f(lo) < 0.0) != (f(hi) < 0.0)) alpha = bisect(f, lo, hi);
      out.roots.push_back(alpha);
    }
  }
  if (out.roots.empty()) {
    throw NoWindowError("no root of the time-reversed determinant inside (0, 1) for " +
                        describe(m11, m22, m));
  }
  std::sort(out.roots.begin(), out.roots.end());
  if (out.roots.size() >= 2) {
    const double lo = out.roots.front();
    const double hi = out.roots.back();
    if (f(0.5 * (lo + hi)) > 0.0) out.window = std::make_pair(lo, hi);
  }
  return out;
}

}  // namespace cvsep
