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

#include "cvsep/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace cvsep {
namespace {

Eigen::MatrixXd congruence(const Eigen::MatrixXd& s, const Eigen::MatrixXd& v) {
  return s * v * s.transpose();
}

}  // namespace

Eigen::MatrixXd symplectic_form(std::size_t n_modes) {
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; j += 2) {
    sigma(j, j + 1) = 1.0;
    sigma(j + 1, j) = -1.0;
  }
  return sigma;
}

DispersionMatrix::DispersionMatrix(RealSymMatrix cov)
    : DispersionMatrix(cov, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cov.dim()))) {}

DispersionMatrix::DispersionMatrix(RealSymMatrix cov, Eigen::VectorXd mean)
    : cov_(std::move(cov)), mean_(std::move(mean)) {
  if (mean_.size() != static_cast<Eigen::Index>(cov_.dim())) {
    throw DimensionError("mean vector length " + std::to_string(mean_.size()) +
                         " does not match dispersion dimension " +
                         std::to_string(cov_.dim()));
  }
  if ((cov_.matrix().diagonal().array() < 0.0).any()) {
    throw DomainError("dispersion matrix has a negative variance");
  }
}

DispersionMatrix DispersionMatrix::from_raw(const Eigen::MatrixXd& raw, Tolerance tol) {
  return DispersionMatrix(RealSymMatrix::symmetrize_validate(raw, tol));
}

SymplecticTransform::SymplecticTransform(Eigen::MatrixXd s, double rel_tol)
    : SymplecticTransform(s, Eigen::VectorXd::Zero(s.rows()), rel_tol) {}

SymplecticTransform::SymplecticTransform(Eigen::MatrixXd s, Eigen::VectorXd shift,
                                         double rel_tol)
    : s_(std::move(s)), shift_(std::move(shift)) {
  if (s_.rows() != s_.cols() || s_.rows() == 0 || s_.rows() % 2 != 0) {
    throw DimensionError("symplectic matrix must be square with positive even dimension");
  }
  if (shift_.size() != s_.rows()) {
    throw DimensionError("shift length does not match symplectic dimension");
  }
  const Eigen::MatrixXd sigma = symplectic_form(n_modes());
  const double scale = std::max(1.0, s_.cwiseAbs().maxCoeff());
  const double dev = (s_.transpose() * sigma * s_ - sigma).cwiseAbs().maxCoeff();
  if (dev > rel_tol * scale * scale) {
    throw SymplecticError("S^T Sigma S deviates from Sigma by " + std::to_string(dev));
  }
}

SymplecticTransform SymplecticTransform::compose(const SymplecticTransform& other) const {
  if (other.s_.rows() != s_.rows()) {
    throw DimensionError("cannot compose symplectic maps of different dimension");
  }
  return SymplecticTransform(s_ * other.s_, s_ * other.shift_ + shift_);
}

SymplecticTransform SymplecticTransform::rotation(double theta) {
  Eigen::MatrixXd s(2, 2);
  s << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return SymplecticTransform(std::move(s));
}

SymplecticTransform SymplecticTransform::squeezer(double r) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(2, 2);
  s(0, 0) = std::exp(-r);
  s(1, 1) = std::exp(r);
  return SymplecticTransform(std::move(s));
}

SymplecticTransform SymplecticTransform::local(
    const std::vector<SymplecticTransform>& per_mode) {
  const auto dim = static_cast<Eigen::Index>(2 * per_mode.size());
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim);
  Eigen::VectorXd shift(dim);
  for (std::size_t j = 0; j < per_mode.size(); ++j) {
    if (per_mode[j].n_modes() != 1) {
      throw DimensionError("local transforms must act on a single mode");
    }
    const auto o = static_cast<Eigen::Index>(2 * j);
    s.block(o, o, 2, 2) = per_mode[j].matrix();
    shift.segment(o, 2) = per_mode[j].shift();
  }
  return SymplecticTransform(std::move(s), std::move(shift));
}

HermitianMatrix build_uncertainty(const DispersionMatrix& v) {
  return HermitianMatrix::from_parts(v.cov(), 0.5 * symplectic_form(v.n_modes()));
}

RsCheck rs_check(const DispersionMatrix& v, Tolerance tol) {
  const HermitianMatrix c = build_uncertainty(v);
  RsCheck out;
  out.min_eig = min_eigenvalue(c);
  out.det_c = determinant(c, tol);
  out.physical = out.min_eig >= -psd_threshold(c, tol);
  return out;
}

DetVBound det_v_bound(const DispersionMatrix& v, Tolerance tol) {
  if (!rs_check(v, tol).physical) {
    throw PreconditionError("det V >= 4^-N is only guaranteed for physical states");
  }
  DetVBound out;
  out.det_v = v.matrix().determinant();
  out.bound = std::pow(4.0, -static_cast<double>(v.n_modes()));
  // Hadamard: |det V| <= prod(diag V) for PSD V, which also bounds the
  // rounding error of the determinant.
  const double hadamard = v.matrix().diagonal().prod();
  const double slack = tol.rel * std::max(hadamard, out.bound) + tol.abs;
  out.holds = out.det_v >= out.bound - slack;
  return out;
}

SingleModeChecks single_mode_checks(double sigma_qq, double sigma_pp,
                                    double sigma_qp, double /*mean_q*/,
                                    double /*mean_p*/, Tolerance tol) {
  if (sigma_qq < 0.0 || sigma_pp < 0.0) {
    throw DomainError("variances must be non-negative");
  }
  const double slack = tol.rel * std::max({sigma_qq * sigma_pp, sigma_qp * sigma_qp, 0.25}) +
                       tol.abs;
  SingleModeChecks out;
  out.heisenberg = sigma_qq * sigma_pp >= 0.25 - slack;
  out.rs = sigma_qq * sigma_pp - sigma_qp * sigma_qp >= 0.25 - slack;
  return out;
}

std::vector<double> mode_block_determinants(const DispersionMatrix& v) {
  std::vector<double> dets;
  dets.reserve(v.n_modes());
  for (std::size_t j = 0; j < v.n_modes(); ++j) {
    const auto o = static_cast<Eigen::Index>(2 * j);
    dets.push_back(v.matrix().block(o, o, 2, 2).determinant());
  }
  return dets;
}

DispersionMatrix apply_symplectic(const DispersionMatrix& v,
                                  const SymplecticTransform& t) {
  if (t.n_modes() != v.n_modes()) {
    throw DimensionError("symplectic transform and state differ in mode count");
  }
  auto cov = RealSymMatrix::symmetrize_validate(congruence(t.matrix(), v.matrix()));
  return DispersionMatrix(std::move(cov), t.matrix() * v.mean() + t.shift());
}

SymplecticTransform random_symplectic(std::size_t n_modes, std::uint64_t seed) {
  if (n_modes == 0) throw DimensionError("n_modes must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> squeeze(-0.8, 0.8);

  auto local_layer = [&] {
    std::vector<SymplecticTransform> blocks;
    for (std::size_t j = 0; j < n_modes; ++j) {
      blocks.push_back(SymplecticTransform::rotation(angle(rng))
                           .compose(SymplecticTransform::squeezer(squeeze(rng)))
                           .compose(SymplecticTransform::rotation(angle(rng))));
    }
    return SymplecticTransform::local(blocks);
  };

  SymplecticTransform result = local_layer();
  const auto dim = static_cast<Eigen::Index>(2 * n_modes);
  for (std::size_t a = 0; a < n_modes; ++a) {
    for (std::size_t b = a + 1; b < n_modes; ++b) {
      // Passive mixing rotation of modes a and b (same angle on q and p).
      const double th = angle(rng);
      Eigen::MatrixXd mix = Eigen::MatrixXd::Identity(dim, dim);
      for (Eigen::Index k = 0; k < 2; ++k) {
        const auto ia = static_cast<Eigen::Index>(2 * a) + k;
        const auto ib = static_cast<Eigen::Index>(2 * b) + k;
        mix(ia, ia) = std::cos(th);
        mix(ia, ib) = std::sin(th);
        mix(ib, ia) = -std::sin(th);
        mix(ib, ib) = std::cos(th);
      }
      result = SymplecticTransform(std::move(mix)).compose(result);
    }
  }
  if (n_modes > 1) result = local_layer().compose(result);
  return result;
}

}  // namespace cvsep
