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

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cvsep/uncertainty.hpp"

namespace cvsep {

// Symplectic tomograms omega(X, mu, nu) of centred Gaussian states and their
// finite mixtures. X_i = mu_i q_i + nu_i p_i, one component per mode.

/// Sigma_X(mu, nu) = L V L^T, where row i of L holds mu_i at q_i and nu_i at
/// p_i. This is the covariance of the tomographic variables X.
Eigen::MatrixXd tomographic_sigma(const DispersionMatrix& v, const Eigen::VectorXd& mu,
                                  const Eigen::VectorXd& nu);

/// Normal density with covariance tomographic_sigma(v, mu, nu) at X. Throws
/// DegenerateDirectionError when that covariance is singular.
double tomogram_density(const DispersionMatrix& v, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& mu, const Eigen::VectorXd& nu);

/// Tomogram of sum_k w_k rho_k for centred Gaussian components rho_k.
class GaussianTomogram {
 public:
  struct Component {
    double weight;
    DispersionMatrix state;
  };

  /// Throws DomainError if the state has a nonzero mean.
  explicit GaussianTomogram(DispersionMatrix state);
  /// Weights must be non-negative and sum to 1 within 1e-12.
  static GaussianTomogram mixture(std::vector<Component> components);

  std::size_t n_modes() const { return n_modes_; }
  const std::vector<Component>& components() const { return components_; }

  double density(const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                 const Eigen::VectorXd& nu) const;

  /// Joint density of the X components listed in `axes` (0-based), the
  /// others integrated out. `x` holds one value per listed axis.
  double marginal_density(const std::vector<std::size_t>& axes, const Eigen::VectorXd& x,
                          const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) const;

  /// (weight, covariance of X) for each component, argument scaling applied.
  std::vector<std::pair<double, Eigen::MatrixXd>> component_sigmas(
      const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) const;

  /// Covariance of X (all components, possibly singular).
  Eigen::MatrixXd sigma(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) const;

  /// omega_S(X, mu, nu) = omega(X, mu / lambda_q, nu / lambda_p).
  GaussianTomogram scaled(const Eigen::VectorXd& lambda_q,
                          const Eigen::VectorXd& lambda_p) const;

 private:
  GaussianTomogram(std::vector<Component> components, Eigen::VectorXd mu_factor,
                   Eigen::VectorXd nu_factor);
  void check_args(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) const;

  std::vector<Component> components_;
  std::size_t n_modes_ = 0;
  // Multipliers applied to (mu, nu) before evaluation; 1/lambda after scaling.
  Eigen::VectorXd mu_factor_;
  Eigen::VectorXd nu_factor_;
};

/// Same as t.scaled(lambda_q, lambda_p); throws ZeroScaleError on a zero
/// factor.
GaussianTomogram scale_tomogram(const GaussianTomogram& t, const Eigen::VectorXd& lambda_q,
                                const Eigen::VectorXd& lambda_p);

/// Rebuilds V from tomographic dispersions evaluated at unit directions:
///   sigma_QjQj = S_jj(mu_j = 1), sigma_PjPj = S_jj(nu_j = 1),
///   sigma_QjPj = [S_jj(mu_j = nu_j = 1) - sigma_QjQj - sigma_PjPj] / 2,
///   sigma_QjPk = S_jk(mu_j = nu_k = 1), and likewise with mu_j = mu_k = 1 and
///   nu_j = nu_k = 1 for the QQ and PP cross terms (j != k).
DispersionMatrix extract_dispersion(const GaussianTomogram& t);

struct GridAxis {
  double min = -10.0;
  double max = 10.0;
  std::size_t count = 2001;

  double step() const { return (max - min) / static_cast<double>(count - 1); }
  double at(std::size_t i) const;
};

/// Tomogram values on a uniform grid over the listed X components.
/// `values` is row-major with the last axis varying fastest.
struct SampledTomogram {
  Eigen::VectorXd mu;
  Eigen::VectorXd nu;
  std::vector<std::size_t> axes;
  std::vector<GridAxis> grid;
  std::vector<double> values;

  std::size_t point_count() const;
  /// Throws DimensionError/GridTooCoarseError/DomainError on inconsistent data.
  void validate() const;
};

SampledTomogram sample_tomogram(const GaussianTomogram& t, const Eigen::VectorXd& mu,
                                const Eigen::VectorXd& nu, std::vector<std::size_t> axes,
                                std::vector<GridAxis> grid);

struct Moments {
  Eigen::VectorXd mean;
  Eigen::MatrixXd sigma;
  double mass = 0.0;
};

/// Trapezoidal first and centred second moments, renormalised by the
/// numeric mass. Throws GridTooCoarseError if the mass is off by more than
/// 1e-3 or an axis spans fewer than 8 standard deviations.
Moments numeric_moments(const SampledTomogram& st);

struct QuadratureConfig {
  std::size_t points_1d = 2001;
  std::size_t points_2d = 401;
  /// Half-width of each axis in units of that axis' standard deviation.
  double span_sigmas = 10.0;
};

/// extract_dispersion with every tomographic dispersion replaced by the
/// quadrature of a sampled marginal tomogram.
DispersionMatrix extract_dispersion_numeric(const GaussianTomogram& t,
                                            const QuadratureConfig& cfg = {});

/// |omega(X, mu, nu) - omega(1, mu/X, nu/X) / |X|| for a single-mode
/// tomogram. Throws DomainError for X == 0.
double homogeneity_residual(const GaussianTomogram& t, double x, double mu, double nu);

}  // namespace cvsep
