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

#include "cvsep/scaling.hpp"

#include <cmath>
#include <string>

namespace cvsep {

ScalingVector::ScalingVector(std::vector<double> x) : x_(std::move(x)) {
  if (x_.empty() || x_.size() % 2 != 0) {
    throw DimensionError("scaling vector needs 2N entries, got " +
                         std::to_string(x_.size()));
  }
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] == 0.0) {
      throw ZeroScaleError("scaling entry " + std::to_string(i + 1) + " is zero");
    }
    if (!std::isfinite(x_[i])) {
      throw DomainError("scaling entry " + std::to_string(i + 1) + " is not finite");
    }
  }
}

ScalingVector ScalingVector::identity(std::size_t n_modes) {
  return ScalingVector(std::vector<double>(2 * n_modes, 1.0));
}

ScalingVector ScalingVector::momentum(std::size_t n_modes, std::size_t mode, double x) {
  if (mode < 1 || mode > n_modes) {
    throw IndexError("mode " + std::to_string(mode) + " outside 1.." +
                     std::to_string(n_modes));
  }
  std::vector<double> v(2 * n_modes, 1.0);
  v[2 * mode - 1] = x;
  return ScalingVector(std::move(v));
}

Eigen::VectorXd ScalingVector::as_vector() const {
  return Eigen::Map<const Eigen::VectorXd>(x_.data(), static_cast<Eigen::Index>(x_.size()));
}

ScalingVector ScalingVector::operator*(const ScalingVector& other) const {
  if (other.size() != size()) {
    throw DimensionError("cannot multiply scaling vectors of different length");
  }
  std::vector<double> out(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) out[i] = x_[i] * other.x_[i];
  return ScalingVector(std::move(out));
}

bool is_admissible(const ScalingVector& x, double tol) {
  for (std::size_t j = 0; j < x.n_modes(); ++j) {
    if (std::abs(x[2 * j] * x[2 * j + 1]) < 1.0 - tol) return false;
  }
  return true;
}

void require_admissible(const ScalingVector& x, double tol) {
  for (std::size_t j = 0; j < x.n_modes(); ++j) {
    const double prod = std::abs(x[2 * j] * x[2 * j + 1]);
    if (prod < 1.0 - tol) {
      throw AdmissibilityError("mode " + std::to_string(j + 1) +
                               " has |x_q x_p| = " + std::to_string(prod) + " < 1");
    }
  }
}

DispersionMatrix apply_scaling(const DispersionMatrix& v, const ScalingVector& x) {
  if (x.size() != v.dim()) {
    throw DimensionError("scaling vector length " + std::to_string(x.size()) +
                         " does not match dispersion dimension " + std::to_string(v.dim()));
  }
  const Eigen::VectorXd d = x.as_vector();
  // Entrywise x_a x_b V_ab; exactly symmetric since multiplication commutes.
  Eigen::MatrixXd scaled = v.matrix();
  for (Eigen::Index i = 0; i < scaled.rows(); ++i) {
    for (Eigen::Index j = 0; j < scaled.cols(); ++j) {
      scaled(i, j) = d(i) * d(j) * v.matrix()(i, j);
    }
  }
  return DispersionMatrix(RealSymMatrix::symmetrize_validate(scaled),
                          d.cwiseProduct(v.mean()));
}

HermitianMatrix scaled_uncertainty(const DispersionMatrix& v, const ScalingVector& x) {
  return build_uncertainty(apply_scaling(v, x));
}

}  // namespace cvsep
