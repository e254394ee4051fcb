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

#include "support/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_complex.hpp>

namespace cvsep::testing {
namespace {

template <typename Mat>
typename Mat::Scalar laplace(const Mat& m) {
  using S = typename Mat::Scalar;
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  S total = 0;
  for (Eigen::Index col = 0; col < n; ++col) {
    if (m(0, col) == S(0)) continue;
    Mat minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const S sign = (col % 2 == 0) ? S(1) : S(-1);
    total += sign * m(0, col) * laplace(minor);
  }
  return total;
}

using HpComplex = boost::multiprecision::cpp_complex_50;
using HpMatrix = std::vector<std::vector<HpComplex>>;

HpComplex laplace_hp(const HpMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  HpComplex total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    HpMatrix minor(n - 1, std::vector<HpComplex>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) minor[r - 1][cc++] = m[r][c];
    }
    const HpComplex term = m[0][col] * laplace_hp(minor);
    total += (col % 2 == 0) ? term : HpComplex(-term);
  }
  return total;
}

Eigen::MatrixXd scaled(const Eigen::MatrixXd& v, const std::vector<double>& x) {
  Eigen::MatrixXd vx = v;
  for (Eigen::Index a = 0; a < v.rows(); ++a)
    for (Eigen::Index b = 0; b < v.cols(); ++b) vx(a, b) *= x[a] * x[b];
  return vx;
}

Eigen::Matrix2d rot(double t) {
  Eigen::Matrix2d r;
  r << std::cos(t), std::sin(t), -std::sin(t), std::cos(t);
  return r;
}

}  // namespace

std::complex<double> cofactor_det(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() > 8) throw std::invalid_argument("cofactor_det");
  return laplace(m);
}

double cofactor_det(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols() || m.rows() > 8) throw std::invalid_argument("cofactor_det");
  return laplace(m);
}

Eigen::MatrixXd omega_stack(int n_modes) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    s(2 * j, 2 * j + 1) = 1.0;
    s(2 * j + 1, 2 * j) = -1.0;
  }
  return s;
}

Eigen::MatrixXcd uncertainty_of(const Eigen::MatrixXd& v) {
  const int n = static_cast<int>(v.rows()) / 2;
  Eigen::MatrixXcd c = v.cast<std::complex<double>>();
  c += std::complex<double>(0.0, 0.5) * omega_stack(n).cast<std::complex<double>>();
  return c;
}

double cofactor_det_hp(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() > 8) throw std::invalid_argument("cofactor_det_hp");
  HpMatrix h(static_cast<std::size_t>(m.rows()), std::vector<HpComplex>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = HpComplex(m(i, j).real(), m(i, j).imag());
  return static_cast<double>(laplace_hp(h).real());
}

double scaled_det(const Eigen::MatrixXd& v, const std::vector<double>& x) {
  return cofactor_det(uncertainty_of(scaled(v, x))).real();
}

double scaled_det_hp(const Eigen::MatrixXd& v, const std::vector<double>& x) {
  return cofactor_det_hp(uncertainty_of(scaled(v, x)));
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if ((flo > 0) == (f(hi) > 0)) throw std::invalid_argument("bisect: no sign change");
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double trapezoid(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / (n - 1);
  double s = 0.5 * (f(a) + f(b));
  for (int i = 1; i < n - 1; ++i) s += f(a + i * h);
  return s * h;
}

double StateGen::uniform(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng_);
}

int StateGen::uniform_int(int a, int b) {
  return std::uniform_int_distribution<int>(a, b)(rng_);
}

Eigen::Matrix2d StateGen::single_mode() {
  const double nu = 0.5 + std::exponential_distribution<double>(1.5)(rng_);
  const double r = uniform(-1.0, 1.0);
  Eigen::Matrix2d sq = Eigen::Matrix2d::Zero();
  sq(0, 0) = std::exp(-r);
  sq(1, 1) = std::exp(r);
  const Eigen::Matrix2d s = rot(uniform(0, 2 * std::numbers::pi)) * sq;
  return nu * s * s.transpose();
}

Eigen::MatrixXd StateGen::symplectic(int n_modes) {
  const int d = 2 * n_modes;
  auto local = [&] {
    Eigen::MatrixXd l = Eigen::MatrixXd::Zero(d, d);
    for (int j = 0; j < n_modes; ++j) {
      Eigen::Matrix2d sq = Eigen::Matrix2d::Zero();
      const double r = uniform(-0.9, 0.9);
      sq(0, 0) = std::exp(-r);
      sq(1, 1) = std::exp(r);
      l.block<2, 2>(2 * j, 2 * j) =
          rot(uniform(0, 2 * std::numbers::pi)) * sq * rot(uniform(0, 2 * std::numbers::pi));
    }
    return l;
  };
  Eigen::MatrixXd s = local();
  for (int j = 0; j < n_modes; ++j) {
    for (int k = j + 1; k < n_modes; ++k) {
      const double t = uniform(0, 2 * std::numbers::pi);
      Eigen::MatrixXd bs = Eigen::MatrixXd::Identity(d, d);
      bs.block<2, 2>(2 * j, 2 * j) *= std::cos(t);
      bs.block<2, 2>(2 * k, 2 * k) *= std::cos(t);
      bs.block<2, 2>(2 * j, 2 * k) = std::sin(t) * Eigen::Matrix2d::Identity();
      bs.block<2, 2>(2 * k, 2 * j) = -std::sin(t) * Eigen::Matrix2d::Identity();
      s = bs * s;
    }
  }
  return local() * s;
}

Eigen::MatrixXd StateGen::physical(int n_modes) {
  Eigen::MatrixXd thermal = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int j = 0; j < n_modes; ++j) {
    const double nu = 0.5 + std::exponential_distribution<double>(1.5)(rng_);
    thermal(2 * j, 2 * j) = nu;
    thermal(2 * j + 1, 2 * j + 1) = nu;
  }
  const Eigen::MatrixXd s = symplectic(n_modes);
  Eigen::MatrixXd v = s * thermal * s.transpose();
  return 0.5 * (v + v.transpose());
}

Eigen::MatrixXd StateGen::pure(int n_modes) {
  const Eigen::MatrixXd s = symplectic(n_modes);
  Eigen::MatrixXd v = 0.5 * s * s.transpose();
  return 0.5 * (v + v.transpose());
}

Eigen::MatrixXd StateGen::product(int n_modes) {
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int j = 0; j < n_modes; ++j) v.block<2, 2>(2 * j, 2 * j) = single_mode();
  return v;
}

Eigen::MatrixXd StateGen::separable_mixture(int n_modes, int components) {
  const int d = 2 * n_modes;
  std::vector<double> w(static_cast<std::size_t>(components));
  double total = 0.0;
  for (double& x : w) total += (x = std::exponential_distribution<double>(1.0)(rng_));
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  std::vector<Eigen::VectorXd> shifts;
  for (int k = 0; k < components; ++k) {
    const double wk = w[static_cast<std::size_t>(k)] / total;
    Eigen::VectorXd shift(d);
    for (int a = 0; a < d; ++a) shift(a) = uniform(-1.0, 1.0);
    v += wk * product(n_modes);
    mean += wk * shift;
    shifts.push_back(shift);
  }
  for (int k = 0; k < components; ++k) {
    const Eigen::VectorXd delta = shifts[static_cast<std::size_t>(k)] - mean;
    v += (w[static_cast<std::size_t>(k)] / total) * delta * delta.transpose();
  }
  return 0.5 * (v + v.transpose());
}

Eigen::MatrixXd StateGen::symmetric(int dim, double scale) {
  Eigen::MatrixXd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = uniform(-scale, scale);
  a = (0.5 * (a + a.transpose())).eval();
  for (int i = 0; i < dim; ++i) a(i, i) = std::abs(a(i, i));
  return a;
}

}  // namespace cvsep::testing
