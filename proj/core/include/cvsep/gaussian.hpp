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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cvsep/uncertainty.hpp"

namespace cvsep {

/// Real symmetric 2x2 matrix [[m11, m], [m, m22]] defining the two-mode
/// pure Gaussian wave function exp(-q^T M^-1 q / 2). Requires m11 > 0,
/// m22 > 0 and det M > 0 (a singular M is not normalisable).
class PureGaussianParams {
 public:
  PureGaussianParams(double m11, double m22, double m);

  double m11() const { return m11_; }
  double m22() const { return m22_; }
  double m() const { return m_; }
  double det() const { return m11_ * m22_ - m_ * m_; }
  Eigen::Matrix2d matrix() const;

 private:
  double m11_;
  double m22_;
  double m_;
};

/// alpha * |Psi_M><Psi_M| + (1 - alpha) * |Psi_N><Psi_N|, 0 <= alpha <= 1.
class GaussianMixtureParams {
 public:
  GaussianMixtureParams(double alpha, PureGaussianParams m, PureGaussianParams n);

  double alpha() const { return alpha_; }
  const PureGaussianParams& first() const { return m_; }
  const PureGaussianParams& second() const { return n_; }

 private:
  double alpha_;
  PureGaussianParams m_;
  PureGaussianParams n_;
};

/// Second moments of the pure state: <q1^2> = m11/2, <q2^2> = m22/2,
/// <q1 q2> = m/2, <p1^2> = m22/(2|M|), <p2^2> = m11/(2|M|),
/// <p1 p2> = -m/(2|M|), no q-p correlations, zero mean.
DispersionMatrix pure_covariance(const PureGaussianParams& params);

/// W(q, p) = exp(-(q^T M^-1 q + p^T M p)) / pi^2.
double wigner_value(const PureGaussianParams& params, const Eigen::Vector2d& q,
                    const Eigen::Vector2d& p);

/// alpha V(M) + (1 - alpha) V(N). Valid because both components are centred.
DispersionMatrix mixture_covariance(const GaussianMixtureParams& mix);

/// Closed form alpha^2 (1-alpha)^2 det(M - N)^2 / (16 |M| |N|).
double det_cmix(const GaussianMixtureParams& mix);

/// Closed form of det C^x for the mixture at x = -1:
/// det_cmix - (alpha m + (1-alpha) n) / 4 * (alpha m / |M| + (1-alpha) n / |N|).
double det_cmix_time_reversed(const GaussianMixtureParams& mix);

/// det_cmix_time_reversed specialised to n11 = m11, n22 = m22, n = -m:
/// m^4 alpha^2 (1-alpha)^2 / |M|^2 - m^2 (2 alpha - 1)^2 / (4 |M|).
double special_case_det(double m11, double m22, double m, double alpha);

struct FailureWindow {
  /// Zeros of special_case_det inside (0, 1), ascending.
  std::vector<double> roots;
  /// Open interval where special_case_det > 0, i.e. the time-reversal test
  /// does not see the entanglement of the mixture.
  std::optional<std::pair<double, double>> window;
};

/// Solves special_case_det(alpha) = 0 through alpha = 1/2 -+ beta,
/// u = beta^2, which leaves u^2 - (1/2 + |M|/m^2) u + 1/16 = 0. Each root is
/// polished by bisection on special_case_det. Requires m != 0; throws
/// NoWindowError if no root falls inside (0, 1).
FailureWindow failure_window(double m11, double m22, double m);

}  // namespace cvsep
