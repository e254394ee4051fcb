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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "cvsep/errors.hpp"

namespace cvsep {

/// Relative and absolute tolerances. Relative tolerances are applied against
/// the largest entry magnitude of the matrix under test, so verdicts do not
/// change when a matrix is multiplied by a positive constant.
struct Tolerance {
  double rel = 1e-10;
  double abs = 1e-14;

  /// Throws PreconditionError unless both tolerances are strictly positive.
  void validate() const;
};

/// Largest dimension accepted by the dense kernels (16 modes).
inline constexpr std::size_t kDefaultMaxDim = 32;

/// Real symmetric matrix of even dimension. Symmetry is exact: the lower
/// triangle is a copy of the upper triangle.
class RealSymMatrix {
 public:
  /// Averages `raw` with its transpose after checking that the asymmetry is
  /// at most tol.rel * maxabs(raw).
  static RealSymMatrix symmetrize_validate(const Eigen::MatrixXd& raw,
                                           Tolerance tol = {},
                                           std::size_t max_dim = kDefaultMaxDim);

  static RealSymMatrix identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::size_t n_modes() const { return dim() / 2; }
  double operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

  friend bool operator==(const RealSymMatrix& a, const RealSymMatrix& b) {
    return a.m_ == b.m_;
  }

 private:
  explicit RealSymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {}
  Eigen::MatrixXd m_;
};

/// Complex Hermitian matrix of even dimension, exactly Hermitian after
/// construction (real diagonal, lower triangle = conj(upper)).
class HermitianMatrix {
 public:
  static HermitianMatrix symmetrize_validate(const Eigen::MatrixXcd& raw,
                                             Tolerance tol = {},
                                             std::size_t max_dim = kDefaultMaxDim);

  /// `real + i * imag` where `real` is symmetric and `imag` antisymmetric.
  static HermitianMatrix from_parts(const RealSymMatrix& real,
                                    const Eigen::MatrixXd& imag);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  std::complex<double> operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

 private:
  explicit HermitianMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}
  Eigen::MatrixXcd m_;
};

/// Eigenvalues in ascending order. Throws ConvergenceError if the solver
/// reports failure.
std::vector<double> hermitian_eigenvalues(const HermitianMatrix& c);

/// Smallest eigenvalue of `c`.
double min_eigenvalue(const HermitianMatrix& c);

/// Real determinant of a Hermitian matrix. The imaginary part of the LU
/// determinant must stay below tol.rel * max(|det|, maxabs^dim) + tol.abs,
/// otherwise NumericalError.
double determinant(const HermitianMatrix& c, Tolerance tol = {});

/// Determinants of the top-left k x k blocks, k = 1..dim.
std::vector<double> leading_principal_minors(const HermitianMatrix& c,
                                             Tolerance tol = {});

/// Threshold below which an eigenvalue counts as negative for `c`.
double psd_threshold(const HermitianMatrix& c, Tolerance tol = {});

}  // namespace cvsep
