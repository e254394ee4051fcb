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
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace cvsep::testing {

// Laplace expansion along the first row. Exponential cost; dim <= 8 only.
std::complex<double> cofactor_det(const Eigen::MatrixXcd& m);
double cofactor_det(const Eigen::MatrixXd& m);

// Same expansion carried out in 50-digit arithmetic; inputs are taken as exact.
double cofactor_det_hp(const Eigen::MatrixXcd& m);

// Omega blocks on the diagonal, built without the library.
Eigen::MatrixXd omega_stack(int n_modes);

// V + (i/2) Sigma as a plain complex matrix.
Eigen::MatrixXcd uncertainty_of(const Eigen::MatrixXd& v);

// det of D_x V D_x + (i/2) Sigma by cofactor expansion.
double scaled_det(const Eigen::MatrixXd& v, const std::vector<double>& x);
double scaled_det_hp(const Eigen::MatrixXd& v, const std::vector<double>& x);

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-14);

// Composite trapezoid rule on [a, b] with n points.
double trapezoid(const std::function<double(double)>& f, double a, double b, int n);

class StateGen {
 public:
  explicit StateGen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b);
  int uniform_int(int a, int b);

  // nu * R S S^T R^T with nu >= 1/2.
  Eigen::Matrix2d single_mode();
  // Symplectic from local squeezers/rotations and beam splitters.
  Eigen::MatrixXd symplectic(int n_modes);
  // Thermal diagonal conjugated by a random symplectic; physical by construction.
  Eigen::MatrixXd physical(int n_modes);
  Eigen::MatrixXd pure(int n_modes);
  Eigen::MatrixXd product(int n_modes);
  // Convex mixture of displaced product states (covariance of the mixture).
  Eigen::MatrixXd separable_mixture(int n_modes, int components);
  // Uniform entries, diagonal folded to be non-negative (variances).
  Eigen::MatrixXd symmetric(int dim, double scale = 1.0);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cvsep::testing
