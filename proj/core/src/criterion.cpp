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

#include "cvsep/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cvsep {
namespace {

const Eigen::Matrix2d& omega() {
  static const Eigen::Matrix2d w = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();
  return w;
}

void require_two_modes(const DispersionMatrix& v, const char* op) {
  if (v.n_modes() != 2) {
    throw DimensionError(std::string(op) + " needs a two-mode state, got " +
                         std::to_string(v.n_modes()) + " modes");
  }
}

void require_mode(const DispersionMatrix& v, std::size_t mode) {
  if (mode < 1 || mode > v.n_modes()) {
    throw IndexError("mode " + std::to_string(mode) + " outside 1.." +
                     std::to_string(v.n_modes()));
  }
}

double trace_term(const BlockDecomposition& b) {
  const Eigen::Matrix2d& w = omega();
  return (b.v1 * w * b.v12 * w * b.v2 * w * b.v12.transpose() * w).trace();
}

// Coefficients below this are treated as zero when deciding whether the
// determinant polynomial is bounded below. det V is quartic in the entries.
double coefficient_floor(const DispersionMatrix& v) {
  const double s = v.cov().max_abs();
  return 1e-12 * std::max(s * s * s * s, 1e-4);
}

struct Probe {
  ScalingVector x;
  double det;
  double min_eig;
};

Probe probe(const DispersionMatrix& v, ScalingVector x, std::optional<double> det_hint) {
  const HermitianMatrix c = scaled_uncertainty(v, x);
  const double det = det_hint ? *det_hint : determinant(c);
  const double me = min_eigenvalue(c);
  return Probe{std::move(x), det, me};
}

Verdict unphysical(const RsCheck& rs, double tol) {
  Verdict out;
  out.status = Status::kUnphysical;
  out.min_det = rs.det_c;
  out.min_eig = rs.min_eig;
  out.tolerance = tol;
  return out;
}

// Picks the partial time reversal when it detects, otherwise the probe with
// the most negative eigenvalue.
Verdict decide(const std::vector<Probe>& probes, double tol, double min_det_region) {
  Verdict out;
  out.tolerance = tol;
  const Probe* best = nullptr;
  const Probe* time_reversal = nullptr;
  double min_eig = std::numeric_limits<double>::infinity();
  for (const Probe& p : probes) {
    min_eig = std::min(min_eig, p.min_eig);
    if (p.min_eig >= -tol) continue;
    bool is_tr = false;
    for (std::size_t i = 0; i < p.x.size(); ++i) {
      if (p.x[i] == -1.0) is_tr = true;
      if (std::abs(p.x[i]) != 1.0) {
        is_tr = false;
        break;
      }
    }
    if (is_tr && !time_reversal) time_reversal = &p;
    if (!best || p.min_eig < best->min_eig) best = &p;
  }
  if (best) {
    const Probe& w = time_reversal ? *time_reversal : *best;
    out.status = Status::kEntangled;
    out.witness = w.x;
    out.min_det = w.det;
    out.min_eig = w.min_eig;
  } else {
    out.status = Status::kNotDetected;
    out.min_det = min_det_region;
    out.min_eig = min_eig;
  }
  return out;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kEntangled:
      return "ENTANGLED";
    case Status::kNotDetected:
      return "NOT_DETECTED";
    case Status::kUnphysical:
      return "UNPHYSICAL";
  }
  return "UNKNOWN";
}

Status status_from_string(std::string_view name) {
  if (name == "ENTANGLED") return Status::kEntangled;
  if (name == "NOT_DETECTED") return Status::kNotDetected;
  if (name == "UNPHYSICAL") return Status::kUnphysical;
  throw DomainError("unknown status '" + std::string(name) + "'");
}

BlockDecomposition BlockDecomposition::of(const DispersionMatrix& v) {
  require_two_modes(v, "block decomposition");
  const Eigen::MatrixXd& m = v.matrix();
  return BlockDecomposition{m.block<2, 2>(0, 0), m.block<2, 2>(2, 2), m.block<2, 2>(0, 2)};
}

Eigen::Matrix4d BlockDecomposition::reassemble() const {
  Eigen::Matrix4d m;
  m << v1, v12, v12.transpose(), v2;
  return m;
}

void SweepConfig::validate() const {
  if (!(x_min >= 1.0)) throw PreconditionError("grid x_min must be >= 1");
  if (!(x_max >= x_min)) throw PreconditionError("grid x_max must be >= x_min");
  if (tolerance && !(*tolerance > 0.0)) throw PreconditionError("tolerance must be positive");
  if (points_per_sign == 0) throw PreconditionError("grid needs at least one point per sign");
  if (points_per_sign == 1 && x_max != x_min) {
    throw PreconditionError("a one-point grid needs x_min == x_max");
  }
}

std::vector<double> SweepConfig::values() const {
  validate();
  std::vector<double> mags(points_per_sign);
  for (std::size_t i = 0; i < points_per_sign; ++i) {
    if (points_per_sign == 1) {
      mags[i] = x_min;
      continue;
    }
    const double t = static_cast<double>(i) / static_cast<double>(points_per_sign - 1);
    mags[i] = spacing == Spacing::kLog
                  ? x_min * std::pow(x_max / x_min, t)
                  : x_min + t * (x_max - x_min);
  }
  // Pin the end points exactly.
  mags.front() = x_min;
  mags.back() = x_max;
  if (include_time_reversal && mags.front() != 1.0) mags.insert(mags.begin(), 1.0);

  std::vector<double> out;
  out.reserve(2 * mags.size());
  for (auto it = mags.rbegin(); it != mags.rend(); ++it) out.push_back(-*it);
  for (double m : mags) out.push_back(m);
  return out;
}

double verdict_tolerance(const DispersionMatrix& v) {
  const double s = v.cov().max_abs();
  return std::max(1e-9 * s * s, 1e-14);
}

TwoModeCoeffs two_mode_coeffs(const DispersionMatrix& v) {
  require_two_modes(v, "two_mode_coeffs");
  const BlockDecomposition blocks = BlockDecomposition::of(v);
  const Eigen::MatrixXd& m = v.matrix();
  const double det_v = m.determinant();
  const double det_v1 = blocks.v1.determinant();
  const double det_v2 = blocks.v2.determinant();

  TwoModeCoeffs k;
  // x scales p2, so the x^2 term carries det V and the mode-2 block, the
  // constant term the mode-1 block.
  k.a = det_v - 0.25 * det_v2;
  k.b = 0.25 * (m(0, 3) * m(1, 2) - m(0, 2) * m(1, 3));
  k.c = 1.0 / 16.0 - 0.25 * det_v1;

  const double via_block = -0.25 * blocks.v12.determinant();
  const double scale = std::max(std::abs(m(0, 3) * m(1, 2)), std::abs(m(0, 2) * m(1, 3)));
  if (std::abs(k.b - via_block) > 1e-12 * scale + 1e-15) {
    throw NumericalError("b coefficient disagrees with -det(V12)/4");
  }
  return k;
}

double det_cx_two_mode(const DispersionMatrix& v, double x) {
  return two_mode_coeffs(v).at(x);
}

DiscriminantResult discriminant_test(const DispersionMatrix& v) {
  const TwoModeCoeffs k = two_mode_coeffs(v);
  const BlockDecomposition blocks = BlockDecomposition::of(v);
  const double det_v = v.matrix().determinant();
  const double det_v12 = blocks.v12.determinant();

  DiscriminantResult out;
  out.value = k.b * k.b - 4.0 * k.a * k.c;
  const double block_form =
      (det_v12 * det_v12 -
       (4.0 * det_v - blocks.v2.determinant()) * (1.0 - 4.0 * blocks.v1.determinant())) /
      16.0;
  const double scale = std::max({k.b * k.b, std::abs(4.0 * k.a * k.c), 1e-4});
  if (std::abs(out.value - block_form) > 1e-9 * scale) {
    throw NumericalError("discriminant disagrees with its block-determinant form");
  }
  out.passes = out.value <= 1e-10 * scale;
  return out;
}

SimonResult simon_test(const DispersionMatrix& v) {
  require_two_modes(v, "simon_test");
  const BlockDecomposition blocks = BlockDecomposition::of(v);
  const double d1 = blocks.v1.determinant();
  const double d2 = blocks.v2.determinant();
  const double d12 = blocks.v12.determinant();
  const double gap = 0.25 - std::abs(d12);

  SimonResult out;
  out.lhs = d1 * d2 + gap * gap - trace_term(blocks);
  out.rhs = 0.25 * (d1 + d2);
  const double s = v.cov().max_abs();
  const double slack = 1e-10 * std::max({std::abs(out.lhs), std::abs(out.rhs), s * s * s * s}) +
                       1e-14;
  out.passes = out.lhs >= out.rhs - slack;
  return out;
}

double block_det_identity_residual(const DispersionMatrix& v) {
  require_two_modes(v, "block_det_identity_residual");
  const BlockDecomposition blocks = BlockDecomposition::of(v);
  const double d12 = blocks.v12.determinant();
  const double expansion =
      blocks.v1.determinant() * blocks.v2.determinant() + d12 * d12 - trace_term(blocks);
  return v.matrix().determinant() - expansion;
}

Verdict sweep_two_mode(const DispersionMatrix& v, const SweepConfig& grid) {
  require_two_modes(v, "sweep_two_mode");
  const double tol = grid.tolerance.value_or(verdict_tolerance(v));
  const RsCheck rs = rs_check(v);
  if (!rs.physical) return unphysical(rs, tol);

  const TwoModeCoeffs k = two_mode_coeffs(v);
  const double floor = coefficient_floor(v);
  const std::vector<double> xs = grid.values();

  // Closed-form candidates on {|x| >= 1}: the boundary, the vertex, and a
  // point past the outermost root when the polynomial is unbounded below.
  std::vector<double> closed = {-1.0, 1.0};
  double min_det_region = std::min(k.at(-1.0), k.at(1.0));
  if (k.a > floor) {
    const double vertex = -k.b / k.a;
    if (std::abs(vertex) >= 1.0) {
      closed.push_back(vertex);
      min_det_region = std::min(min_det_region, k.at(vertex));
    }
  } else if (k.a < -floor || std::abs(k.b) > floor) {
    double reach = grid.x_max;
    if (k.a < -floor) {
      const double disc = std::max(k.b * k.b - k.a * k.c, 0.0);
      reach = std::max(reach, 2.0 * (std::abs(k.b) + std::sqrt(disc)) / std::abs(k.a) + 1.0);
    } else {
      reach = std::max(reach, 2.0 * std::abs(k.c / (2.0 * k.b)) + 1.0);
    }
    closed.push_back(k.b > 0.0 ? -reach : reach);
    min_det_region = -std::numeric_limits<double>::infinity();
  }

  std::vector<Probe> probes;
  probes.reserve(closed.size() + xs.size());
  for (double x : closed) {
    probes.push_back(probe(v, ScalingVector::momentum(2, 2, x), k.at(x)));
  }
  for (double x : xs) {
    probes.push_back(probe(v, ScalingVector::momentum(2, 2, x), k.at(x)));
    min_det_region = std::min(min_det_region, k.at(x));
  }

  Verdict out = decide(probes, tol, min_det_region);
  out.diagnostics.coeffs = k;
  out.diagnostics.discriminant = k.b * k.b - 4.0 * k.a * k.c;
  const SimonResult simon = simon_test(v);
  out.diagnostics.simon_lhs = simon.lhs;
  out.diagnostics.simon_rhs = simon.rhs;
  return out;
}

Verdict sweep_mode_vs_rest(const DispersionMatrix& v, std::size_t mode,
                           const SweepConfig& grid) {
  require_mode(v, mode);
  const double tol = grid.tolerance.value_or(verdict_tolerance(v));
  const RsCheck rs = rs_check(v);
  if (!rs.physical) return unphysical(rs, tol);

  std::vector<Probe> probes;
  double min_det = std::numeric_limits<double>::infinity();
  for (double x : grid.values()) {
    probes.push_back(probe(v, ScalingVector::momentum(v.n_modes(), mode, x), std::nullopt));
    min_det = std::min(min_det, probes.back().det);
  }
  Verdict out = decide(probes, tol, min_det);
  if (v.n_modes() == 2 && mode == 2) {
    out.diagnostics.coeffs = two_mode_coeffs(v);
  }
  return out;
}

std::vector<SurfacePoint> sweep_two_param(const DispersionMatrix& v, std::size_t mode_j,
                                          std::size_t mode_k, const SweepConfig& grid_x,
                                          const SweepConfig& grid_y) {
  if (v.n_modes() < 3) {
    throw DimensionError("sweep_two_param needs at least three modes");
  }
  require_mode(v, mode_j);
  require_mode(v, mode_k);
  if (mode_j == mode_k) throw IndexError("sweep_two_param needs two distinct modes");

  const std::vector<double> xs = grid_x.values();
  const std::vector<double> ys = grid_y.values();
  std::vector<SurfacePoint> out;
  out.reserve(xs.size() * ys.size());
  std::vector<double> scale(v.dim(), 1.0);
  for (double x : xs) {
    for (double y : ys) {
      scale[2 * mode_j - 1] = x;
      scale[2 * mode_k - 1] = y;
      const double me = min_eigenvalue(scaled_uncertainty(v, ScalingVector(scale)));
      out.push_back(SurfacePoint{x, y, me});
    }
  }
  return out;
}

Status classify_surface(const std::vector<SurfacePoint>& surface, double tol) {
  for (const SurfacePoint& p : surface) {
    if (p.min_eig < -tol) return Status::kEntangled;
  }
  return Status::kNotDetected;
}

}  // namespace cvsep
