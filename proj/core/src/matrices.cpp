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

#include "cvsep/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace cvsep {
namespace {

void check_shape(Eigen::Index rows, Eigen::Index cols, std::size_t max_dim) {
  if (rows != cols) {
    std::ostringstream os;
    os << "matrix is not square (" << rows << "x" << cols << ")";
    throw DimensionError(os.str());
  }
  if (rows == 0 || rows % 2 != 0) {
    throw DimensionError("matrix dimension must be positive and even, got " +
                         std::to_string(rows));
  }
  if (static_cast<std::size_t>(rows) > max_dim) {
    throw DimensionError("matrix dimension " + std::to_string(rows) +
                         " exceeds the configured cap " + std::to_string(max_dim));
  }
}

double imag_bound(double det_re, double scale, std::size_t dim, Tolerance tol) {
  double magnitude = std::pow(scale, static_cast<double>(dim));
  return tol.rel * std::max(std::abs(det_re), magnitude) + tol.abs;
}

double real_det_checked(const Eigen::MatrixXcd& m, double scale, Tolerance tol) {
  std::complex<double> det = m.partialPivLu().determinant();
  if (std::abs(det.imag()) > imag_bound(det.real(), scale, m.rows(), tol)) {
    std::ostringstream os;
    os << "determinant of Hermitian matrix has imaginary residue " << det.imag()
       << " (real part " << det.real() << ")";
    throw NumericalError(os.str());
  }
  return det.real();
}

}  // namespace

void Tolerance::validate() const {
  if (!(rel > 0.0) || !(abs > 0.0)) {
    throw PreconditionError("tolerances must be strictly positive");
  }
}

RealSymMatrix RealSymMatrix::symmetrize_validate(const Eigen::MatrixXd& raw,
                                                 Tolerance tol,
                                                 std::size_t max_dim) {
  tol.validate();
  check_shape(raw.rows(), raw.cols(), max_dim);
  if (!raw.allFinite()) throw DomainError("matrix has non-finite entries");

  const double scale = raw.cwiseAbs().maxCoeff();
  const double asym = (raw - raw.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.rel * scale) {
    std::ostringstream os;
    os << "matrix asymmetry " << asym << " exceeds " << tol.rel * scale;
    throw AsymmetryError(os.str());
  }

  Eigen::MatrixXd sym = raw;
  for (Eigen::Index i = 0; i < raw.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < raw.cols(); ++j) {
      sym(i, j) = 0.5 * (raw(i, j) + raw(j, i));
      sym(j, i) = sym(i, j);
    }
  }
  return RealSymMatrix(std::move(sym));
}

RealSymMatrix RealSymMatrix::identity(std::size_t dim) {
  check_shape(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim),
              kDefaultMaxDim);
  return RealSymMatrix(Eigen::MatrixXd::Identity(dim, dim));
}

HermitianMatrix HermitianMatrix::symmetrize_validate(const Eigen::MatrixXcd& raw,
                                                     Tolerance tol,
                                                     std::size_t max_dim) {
  tol.validate();
  check_shape(raw.rows(), raw.cols(), max_dim);
  if (!raw.allFinite()) throw DomainError("matrix has non-finite entries");

  const double scale = raw.cwiseAbs().maxCoeff();
  const double asym = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol.rel * scale) {
    std::ostringstream os;
    os << "matrix deviates from Hermitian by " << asym;
    throw AsymmetryError(os.str());
  }

  Eigen::MatrixXcd herm = raw;
  for (Eigen::Index i = 0; i < raw.rows(); ++i) {
    herm(i, i) = raw(i, i).real();
    for (Eigen::Index j = i + 1; j < raw.cols(); ++j) {
      herm(i, j) = 0.5 * (raw(i, j) + std::conj(raw(j, i)));
      herm(j, i) = std::conj(herm(i, j));
    }
  }
  return HermitianMatrix(std::move(herm));
}

HermitianMatrix HermitianMatrix::from_parts(const RealSymMatrix& real,
                                            const Eigen::MatrixXd& imag) {
  const auto n = static_cast<Eigen::Index>(real.dim());
  if (imag.rows() != n || imag.cols() != n) {
    throw DimensionError("real and imaginary parts differ in shape");
  }
  if (imag != -imag.transpose()) {
    throw AsymmetryError("imaginary part of a Hermitian matrix must be antisymmetric");
  }
  Eigen::MatrixXcd m(n, n);
  m.real() = real.matrix();
  m.imag() = imag;
  return HermitianMatrix(std::move(m));
}

std::vector<double> hermitian_eigenvalues(const HermitianMatrix& c) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(c.matrix(),
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("Hermitian eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

double min_eigenvalue(const HermitianMatrix& c) {
  return hermitian_eigenvalues(c).front();
}

double determinant(const HermitianMatrix& c, Tolerance tol) {
  return real_det_checked(c.matrix(), c.max_abs(), tol);
}

std::vector<double> leading_principal_minors(const HermitianMatrix& c,
                                             Tolerance tol) {
  std::vector<double> minors;
  minors.reserve(c.dim());
  const double scale = c.max_abs();
  for (Eigen::Index k = 1; k <= static_cast<Eigen::Index>(c.dim()); ++k) {
    minors.push_back(real_det_checked(c.matrix().topLeftCorner(k, k), scale, tol));
  }
  return minors;
}

double psd_threshold(const HermitianMatrix& c, Tolerance tol) {
  return tol.rel * c.max_abs() + tol.abs;
}

}  // namespace cvsep
