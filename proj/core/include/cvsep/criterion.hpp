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
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "cvsep/scaling.hpp"
#include "cvsep/uncertainty.hpp"

namespace cvsep {

/// det C^x = a x^2 + 2 b x + c for the two-mode scaling (1, 1, 1, x).
struct TwoModeCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double at(double x) const { return a * x * x + 2.0 * b * x + c; }

  friend bool operator==(const TwoModeCoeffs&, const TwoModeCoeffs&) = default;
};

/// [[v1, v12], [v12^T, v2]] split of a two-mode dispersion matrix.
struct BlockDecomposition {
  Eigen::Matrix2d v1;
  Eigen::Matrix2d v2;
  Eigen::Matrix2d v12;

  static BlockDecomposition of(const DispersionMatrix& v);
  Eigen::Matrix4d reassemble() const;
};

enum class Status { kEntangled, kNotDetected, kUnphysical };

std::string_view to_string(Status s);
/// Inverse of to_string; throws DomainError on unknown names.
Status status_from_string(std::string_view name);

struct Diagnostics {
  std::optional<TwoModeCoeffs> coeffs;
  std::optional<double> discriminant;
  std::optional<double> simon_lhs;
  std::optional<double> simon_rhs;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

/// Outcome of a separability test.
///
/// For kEntangled, `witness` is an admissible scaling at which C^x has an
/// eigenvalue below -tolerance, and `min_det`/`min_eig` are det C^x and the
/// smallest eigenvalue at that witness. For kNotDetected they are the
/// smallest values seen over the admissible region that was examined. For
/// kUnphysical they describe the unscaled C.
struct Verdict {
  Status status = Status::kNotDetected;
  std::optional<ScalingVector> witness;
  double min_det = 0.0;
  double min_eig = 0.0;
  double tolerance = 0.0;
  Diagnostics diagnostics;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

enum class Spacing { kLog, kLinear };

/// Grid of scaling magnitudes |x| in [x_min, x_max], used with both signs.
struct SweepConfig {
  double x_min = 1.0;
  double x_max = 10.0;
  std::size_t points_per_sign = 101;
  Spacing spacing = Spacing::kLog;
  /// Guarantees x = -1 (partial time reversal) is among the grid points.
  bool include_time_reversal = true;
  /// Eigenvalue threshold for verdicts; verdict_tolerance(V) when unset.
  std::optional<double> tolerance;

  /// Throws PreconditionError on x_min < 1, x_max < x_min or zero points.
  void validate() const;

  /// Signed grid: negative values first (ascending), then positive ones.
  std::vector<double> values() const;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// Eigenvalue threshold used for verdicts: 1e-9 * maxabs(V)^2 (never below
/// 1e-14).
double verdict_tolerance(const DispersionMatrix& v);

/// Coefficients of the two-mode polynomial. Requires N == 2.
TwoModeCoeffs two_mode_coeffs(const DispersionMatrix& v);

/// a x^2 + 2 b x + c, which equals det C^x for x = (1, 1, 1, x).
double det_cx_two_mode(const DispersionMatrix& v, double x);

struct DiscriminantResult {
  double value = 0.0;
  bool passes = false;
};

/// b^2 - 4ac and whether it is <= tolerance. Guarantees positivity of the
/// polynomial for every real x; separable states only need it for |x| >= 1,
/// so a failure here does not imply entanglement.
DiscriminantResult discriminant_test(const DispersionMatrix& v);

struct SimonResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool passes = false;
};

/// Block-determinant form of the partial time reversal condition:
/// det V1 det V2 + (1/4 - |det V12|)^2 - tr[V1 W V12 W V2 W V12^T W]
///   >= (det V1 + det V2) / 4.
SimonResult simon_test(const DispersionMatrix& v);

/// det V minus its block expansion
/// det V1 det V2 + (det V12)^2 - tr[V1 W V12 W V2 W V12^T W].
double block_det_identity_residual(const DispersionMatrix& v);

/// Two-mode partial scaling test over all |x| >= 1. Combines exact
/// minimisation of the determinant polynomial with an eigenvalue sweep over
/// `grid`.
Verdict sweep_two_mode(const DispersionMatrix& v, const SweepConfig& grid = {});

/// Scales only the momentum of `mode` (counted from 1) against the rest.
Verdict sweep_mode_vs_rest(const DispersionMatrix& v, std::size_t mode,
                           const SweepConfig& grid = {});

struct SurfacePoint {
  double x = 1.0;
  double y = 1.0;
  double min_eig = 0.0;
};

/// Smallest eigenvalue of C^x when the momenta of modes `mode_j` and
/// `mode_k` are scaled by x and y. Rows are ordered x-major, each coordinate
/// following SweepConfig::values(). Requires N >= 3.
std::vector<SurfacePoint> sweep_two_param(const DispersionMatrix& v, std::size_t mode_j,
                                          std::size_t mode_k,
                                          const SweepConfig& grid_x = {},
                                          const SweepConfig& grid_y = {});

/// kEntangled iff some surface point has min_eig < -tol.
Status classify_surface(const std::vector<SurfacePoint>& surface, double tol);

}  // namespace cvsep
