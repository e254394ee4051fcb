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
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cvsep/matrices.hpp"

namespace cvsep {

// Canonical variables are interleaved: (q1, p1, q2, p2, ...).

/// Block-diagonal symplectic form diag(Omega, ..., Omega) with
/// Omega = [[0, 1], [-1, 0]].
Eigen::MatrixXd symplectic_form(std::size_t n_modes);

/// Centered second moments V_ab = <{xi_a, xi_b}>/2 of an N-mode state, plus
/// the first moments. Criteria only ever look at V.
class DispersionMatrix {
 public:
  /// Zero-mean state. Throws DomainError on negative variances.
  explicit DispersionMatrix(RealSymMatrix cov);
  DispersionMatrix(RealSymMatrix cov, Eigen::VectorXd mean);

  /// Convenience: symmetrize_validate(raw) with a zero mean.
  static DispersionMatrix from_raw(const Eigen::MatrixXd& raw, Tolerance tol = {});

  std::size_t n_modes() const { return cov_.n_modes(); }
  std::size_t dim() const { return cov_.dim(); }
  const RealSymMatrix& cov() const { return cov_; }
  const Eigen::MatrixXd& matrix() const { return cov_.matrix(); }
  const Eigen::VectorXd& mean() const { return mean_; }

 private:
  RealSymMatrix cov_;
  Eigen::VectorXd mean_;
};

/// Inhomogeneous linear canonical map xi -> S xi + shift.
class SymplecticTransform {
 public:
  /// Throws SymplecticError unless S^T Sigma S == Sigma within
  /// `rel_tol` * max(1, maxabs(S)^2).
  SymplecticTransform(Eigen::MatrixXd s, Eigen::VectorXd shift, double rel_tol = 1e-9);
  explicit SymplecticTransform(Eigen::MatrixXd s, double rel_tol = 1e-9);

  std::size_t n_modes() const { return static_cast<std::size_t>(s_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return s_; }
  const Eigen::VectorXd& shift() const { return shift_; }

  /// this ∘ other (apply `other` first).
  SymplecticTransform compose(const SymplecticTransform& other) const;

  /// Single-mode phase-space rotation by `theta`.
  static SymplecticTransform rotation(double theta);
  /// Single-mode squeezer diag(e^-r, e^r).
  static SymplecticTransform squeezer(double r);
  /// Embed independent single-mode transforms as a block-diagonal map.
  static SymplecticTransform local(const std::vector<SymplecticTransform>& per_mode);

 private:
  Eigen::MatrixXd s_;
  Eigen::VectorXd shift_;
};

/// C = V + (i/2) Sigma.
HermitianMatrix build_uncertainty(const DispersionMatrix& v);

struct RsCheck {
  bool physical = false;
  double min_eig = 0.0;
  double det_c = 0.0;
};

/// Robertson-Schrodinger check: C must be positive semidefinite.
RsCheck rs_check(const DispersionMatrix& v, Tolerance tol = {});

struct DetVBound {
  double det_v = 0.0;
  double bound = 0.0;
  bool holds = false;
};

/// det V >= 4^-N. Only claimed for physical states: throws
/// PreconditionError when rs_check fails.
DetVBound det_v_bound(const DispersionMatrix& v, Tolerance tol = {});

struct SingleModeChecks {
  bool heisenberg = false;
  bool rs = false;
};

/// Heisenberg and Robertson-Schrodinger relations for one mode from centered
/// moments. The means are accepted for completeness and do not enter.
SingleModeChecks single_mode_checks(double sigma_qq, double sigma_pp,
                                    double sigma_qp, double mean_q = 0.0,
                                    double mean_p = 0.0, Tolerance tol = {});

/// Determinants of the per-mode 2x2 diagonal blocks of V. Diagnostic only;
/// physicality is decided by rs_check.
std::vector<double> mode_block_determinants(const DispersionMatrix& v);

/// V -> S V S^T, mean -> S mean + shift.
DispersionMatrix apply_symplectic(const DispersionMatrix& v,
                                  const SymplecticTransform& t);

/// Deterministic pseudo-random symplectic map built from rotations,
/// squeezers and two-mode mixing rotations.
SymplecticTransform random_symplectic(std::size_t n_modes, std::uint64_t seed);

}  // namespace cvsep
