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
#include <vector>

#include <Eigen/Dense>

#include "cvsep/matrices.hpp"
#include "cvsep/uncertainty.hpp"

namespace cvsep {

/// Pairs |x_{2j-1} x_{2j}| may fall short of 1 by this much and still count
/// as admissible, so that the boundary x = +-1 is admitted exactly.
inline constexpr double kAdmissibilityTol = 1e-12;

/// Diagonal scaling D_x = diag(x_1, ..., x_2N) of the canonical variables.
/// Entries must be nonzero; admissibility is a separate question.
class ScalingVector {
 public:
  /// Throws ZeroScaleError on a zero entry, DimensionError on odd/empty length.
  explicit ScalingVector(std::vector<double> x);

  static ScalingVector identity(std::size_t n_modes);
  /// All ones except x_{2*mode} (the momentum of `mode`, counted from 1).
  static ScalingVector momentum(std::size_t n_modes, std::size_t mode, double x);

  std::size_t n_modes() const { return x_.size() / 2; }
  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  const std::vector<double>& values() const { return x_; }
  Eigen::VectorXd as_vector() const;

  /// Entrywise product; scalings form an Abelian semigroup under it.
  ScalingVector operator*(const ScalingVector& other) const;

  friend bool operator==(const ScalingVector&, const ScalingVector&) = default;

 private:
  std::vector<double> x_;
};

/// True iff |x_{2j-1} x_{2j}| >= 1 - tol for every mode j.
bool is_admissible(const ScalingVector& x, double tol = kAdmissibilityTol);

/// Throws AdmissibilityError naming the first offending mode.
void require_admissible(const ScalingVector& x, double tol = kAdmissibilityTol);

/// V -> D_x V D_x, mean -> D_x mean. Any nonzero x is accepted here; the
/// separability tests only ever use admissible ones.
DispersionMatrix apply_scaling(const DispersionMatrix& v, const ScalingVector& x);

/// C^x = D_x V D_x + (i/2) Sigma. Sigma itself is not scaled.
HermitianMatrix scaled_uncertainty(const DispersionMatrix& v, const ScalingVector& x);

}  // namespace cvsep
