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

// Acceptance suite: prints one PASS/FAIL line per criterion.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cvsep/criterion.hpp"
#include "cvsep/gaussian.hpp"
#include "cvsep/tomogram.hpp"
#include "support/oracles.hpp"

namespace {

using namespace cvsep;
using cvsep::testing::StateGen;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

DispersionMatrix state(const Eigen::MatrixXd& v) {
  return DispersionMatrix(RealSymMatrix::symmetrize_validate(v));
}

PureGaussianParams random_params(StateGen& gen) {
  for (;;) {
    const double a = gen.uniform(0.1, 2.0);
    const double b = gen.uniform(0.1, 2.0);
    const double m = gen.uniform(-1.5, 1.5);
    if (a * b - m * m > 0.02) return PureGaussianParams(a, b, m);
  }
}

int run_cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = cli::run(std::move(args), o, e);
  if (out) *out = o.str();
  return code;
}

fs::path scratch() {
  const auto d = fs::temp_directory_path() / "cvsep_acceptance";
  fs::create_directories(d);
  return d;
}

Outcome ac1() {
  Outcome o;
  const auto v = pure_covariance(PureGaussianParams(0.5, 0.5, 0.4));
  const double det_c = rs_check(v).det_c;
  const double det_tr = determinant(scaled_uncertainty(v, ScalingVector({1, 1, 1, -1})));
  o.require(std::abs(det_c) <= 1e-10, fmt("det C = %.3g", det_c));
  o.require(std::abs(det_tr - (-4.0 / 9)) <= 1e-9, fmt("det C^-1 = %.12f", det_tr));
  const auto file = (scratch() / "ac1.json").string();
  std::string report;
  o.require(run_cli({"gaussian", "pure", "--m11", "0.5", "--m22", "0.5", "--m", "0.4", "-o", file}) == 0,
            "gaussian pure failed");
  const int code = run_cli({"test", file}, &report);
  o.require(code == cli::kExitEntangled, fmt("test exit %g", code));
  o.require(report.find("\"witness\": [\n    1.0,\n    1.0,\n    1.0,\n    -1.0\n  ]") != std::string::npos,
            "witness is not x = -1");
  if (o.pass) o.detail = fmt("det C = %.2e, det C^{x=-1} = %.9f, exit 3, witness (1,1,1,-1)", det_c, det_tr);
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto csv = (scratch() / "alpha.csv").string();
  o.require(run_cli({"sweep-alpha", "--m11", "0.5", "--m22", "0.5", "--m", "0.4", "--n11", "0.5", "--n22",
                     "0.5", "--n", "-0.4", "--step", "0.01", "-o", csv}) == 0,
            "sweep-alpha failed");
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  o.require(line == "alpha,det_cx_timereversal,status", "bad header");
  double worst = 0.0;
  int rows = 0;
  bool signs = true;
  while (std::getline(in, line)) {
    double a = 0, d = 0;
    char status[32] = {};
    if (std::sscanf(line.c_str(), "%lf,%lf,%31s", &a, &d, status) != 3) {
      o.require(false, "unparsable row " + line);
      break;
    }
    ++rows;
    worst = std::max(worst, std::abs(d - special_case_det(0.5, 0.5, 0.4, a)));
    if (std::abs(a - 0.25) < 1e-9 || std::abs(a - 0.75) < 1e-9) continue;
    const bool inside = a > 0.25 && a < 0.75;
    signs = signs && (inside ? d > 0 : d < 0);
    signs = signs && (std::string(status) == (inside ? "NOT_DETECTED" : "ENTANGLED"));
  }
  o.require(rows == 101, fmt("%g rows", rows));
  o.require(worst <= 1e-9, fmt("max |csv - closed form| = %.3g", worst));
  o.require(signs, "sign pattern differs from -,+,-");
  const auto w = failure_window(0.5, 0.5, 0.4);
  o.require(w.roots.size() == 2, "expected two roots");
  if (w.roots.size() == 2) {
    o.require(std::abs(w.roots[0] - 0.25) <= 1e-6 && std::abs(w.roots[1] - 0.75) <= 1e-6,
              fmt("roots %.9f, %.9f", w.roots[0], w.roots[1]));
    if (o.pass)
      o.detail = fmt("101 rows, max deviation %.2e, roots %.12f / %.12f", worst, w.roots[0], w.roots[1]);
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  StateGen gen(1003);
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const GaussianMixtureParams mix(gen.uniform(0, 1), random_params(gen), random_params(gen));
    const Eigen::MatrixXd v = mixture_covariance(mix).matrix();
    const double plain = testing::cofactor_det_hp(testing::uncertainty_of(v));
    const double tr = testing::scaled_det_hp(v, {1, 1, 1, -1});
    worst = std::max(worst, std::abs(det_cmix(mix) - plain) / std::max(std::abs(plain), 1e-300));
    worst = std::max(worst, std::abs(det_cmix_time_reversed(mix) - tr) / std::max(std::abs(tr), 1e-300));
  }
  o.require(worst <= 1e-8, fmt("max relative deviation %.3g", worst));
  if (o.pass) o.detail = fmt("500 draws, max relative deviation %.2e", worst);
  return o;
}

Outcome ac4() {
  Outcome o;
  StateGen gen(1004);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t)
    worst = std::max(worst, std::abs(block_det_identity_residual(state(gen.symmetric(4, 1.0)))));
  o.require(worst <= 1e-9, fmt("max residual %.3g", worst));
  if (o.pass) o.detail = fmt("1000 matrices, max residual %.2e", worst);
  return o;
}

Outcome ac5() {
  Outcome o;
  StateGen gen(1005);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Eigen::MatrixXd v = gen.symmetric(4, 1.0);
    const auto s = simon_test(state(v));
    const auto det2 = [](const Eigen::Matrix2d& m) { return m.determinant(); };
    const double rewrite = testing::cofactor_det(v) + 1.0 / 16 -
                           0.5 * std::abs(det2(v.block<2, 2>(0, 2))) -
                           0.25 * (det2(v.block<2, 2>(0, 0)) + det2(v.block<2, 2>(2, 2)));
    worst = std::max(worst, std::abs(s.lhs - s.rhs - rewrite));
  }
  o.require(worst <= 1e-12, fmt("max deviation %.3g", worst));
  const auto p = simon_test(pure_covariance(PureGaussianParams(0.5, 0.5, 0.4)));
  o.require(std::abs(p.lhs - p.rhs + 4.0 / 9) <= 1e-9, fmt("pure lhs - rhs = %.12f", p.lhs - p.rhs));
  if (o.pass) o.detail = fmt("1000 matrices, max deviation %.2e; pure lhs - rhs = %.9f", worst, p.lhs - p.rhs);
  return o;
}

Outcome ac6() {
  Outcome o;
  StateGen gen(1006);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Eigen::MatrixXd raw = t % 2 ? gen.physical(2) : gen.symmetric(4, 2.0);
    const auto v = state(raw);
    double x = gen.uniform(-5, 5);
    if (x == 0.0) x = 1.0;
    const auto c = two_mode_coeffs(v);
    const double poly = c.at(x);
    const double mat = determinant(scaled_uncertainty(v, ScalingVector({1, 1, 1, x})));
    const double oracle = testing::scaled_det(raw, {1, 1, 1, x});
    // Relative to the size of the polynomial's terms.
    const double scale = std::abs(c.a * x * x) + std::abs(2 * c.b * x) + std::abs(c.c);
    worst = std::max({worst, std::abs(poly - mat) / scale, std::abs(poly - oracle) / scale});
  }
  o.require(worst <= 1e-9, fmt("max relative deviation %.3g", worst));
  if (o.pass) o.detail = fmt("1000 pairs, max relative deviation %.2e", worst);
  return o;
}

Outcome ac7() {
  Outcome o;
  StateGen gen(1007);
  int false_pos = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto v = state(gen.separable_mixture(2, 1 + t % 5));
    if (sweep_two_mode(v).status != Status::kNotDetected) ++false_pos;
  }
  int mode_fail = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + t % 4;
    const auto v = state(t % 2 ? gen.product(n) : gen.separable_mixture(n, 3));
    for (int k = 1; k <= n; ++k)
      if (sweep_mode_vs_rest(v, static_cast<std::size_t>(k)).status != Status::kNotDetected) ++mode_fail;
  }
  o.require(false_pos == 0, fmt("%g false positives in two-mode sweep", false_pos));
  o.require(mode_fail == 0, fmt("%g false positives in mode-vs-rest sweep", mode_fail));
  if (o.pass) o.detail = "1000 two-mode mixtures and 100 N-mode products, 0 false positives";
  return o;
}

Outcome ac8() {
  Outcome o;
  StateGen gen(1008);
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 3;
    if (!det_v_bound(state(gen.physical(n))).holds) ++violations;
  }
  o.require(violations == 0, fmt("%g violations", violations));
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto r = det_v_bound(pure_covariance(random_params(gen)));
    worst = std::max(worst, std::abs(r.det_v - r.bound));
    const int n = 1 + t % 3;
    const auto p = det_v_bound(state(gen.pure(n)));
    worst = std::max(worst, std::abs(p.det_v - p.bound));
  }
  for (int n = 1; n <= 3; ++n) {
    const auto r = det_v_bound(state(0.5 * Eigen::MatrixXd::Identity(2 * n, 2 * n)));
    worst = std::max(worst, std::abs(r.det_v - r.bound));
  }
  o.require(worst <= 1e-10, fmt("equality off by %.3g", worst));
  if (o.pass) o.detail = fmt("1000 states hold; pure/vacuum equality within %.2e", worst);
  return o;
}

Outcome ac9() {
  Outcome o;
  StateGen gen(1009);
  double analytic = 0.0, numeric = 0.0, scaled = 0.0, homog = 0.0;
  for (int t = 0; t < 200; ++t) {
    const auto v = state(gen.physical(1 + t % 3));
    const double s = v.cov().max_abs();
    analytic = std::max(analytic, (extract_dispersion(GaussianTomogram(v)).matrix() - v.matrix())
                                      .cwiseAbs().maxCoeff() / s);
    if (t < 10) {
      const auto nv = state(gen.physical(1 + t % 2));
      numeric = std::max(numeric, (extract_dispersion_numeric(GaussianTomogram(nv)).matrix() - nv.matrix())
                                      .cwiseAbs().maxCoeff() / nv.cov().max_abs());
    }
    const int n = static_cast<int>(v.n_modes());
    Eigen::VectorXd lq(n), lp(n);
    std::vector<double> x;
    for (int j = 0; j < n; ++j) {
      lq(j) = gen.uniform(0.3, 3.0) * (gen.uniform(0, 1) < 0.5 ? -1 : 1);
      lp(j) = gen.uniform(0.3, 3.0);
      x.push_back(1 / lq(j));
      x.push_back(1 / lp(j));
    }
    const auto a = extract_dispersion(scale_tomogram(GaussianTomogram(v), lq, lp)).matrix();
    const auto b = apply_scaling(v, ScalingVector(x));
    scaled = std::max(scaled, (a - b.matrix()).cwiseAbs().maxCoeff() / b.cov().max_abs());
  }
  for (int t = 0; t < 100; ++t) {
    const GaussianTomogram tomo(state(gen.physical(1)));
    const double x = gen.uniform(0.1, 4) * (gen.uniform(0, 1) < 0.5 ? -1 : 1);
    const double mu = gen.uniform(-2, 2), nu = gen.uniform(-2, 2);
    const double w = tomo.density(Eigen::VectorXd::Constant(1, x), Eigen::VectorXd::Constant(1, mu),
                                  Eigen::VectorXd::Constant(1, nu));
    homog = std::max(homog, homogeneity_residual(tomo, x, mu, nu) / w);
  }
  o.require(analytic <= 1e-9, fmt("analytic deviation %.3g", analytic));
  o.require(numeric <= 1e-5, fmt("numeric deviation %.3g", numeric));
  o.require(scaled <= 1e-9, fmt("scaling deviation %.3g", scaled));
  o.require(homog <= 1e-12, fmt("homogeneity residual %.3g", homog));
  if (o.pass) {
    o.detail = fmt("analytic %.1e, numeric %.1e, ", analytic, numeric) +
               fmt("scaling %.1e, homogeneity %.1e", scaled, homog);
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  const auto v = state(Eigen::MatrixXd::Identity(4, 4));
  const auto d = discriminant_test(v);
  const auto r = sweep_two_mode(v);
  o.require(std::abs(d.value - 0.5625) <= 1e-12 && !d.passes, fmt("discriminant %.12f", d.value));
  o.require(r.status == Status::kNotDetected, "sweep did not return NOT_DETECTED");
  if (o.pass) o.detail = fmt("B^2 - 4AC = %.4f > 0, sweep NOT_DETECTED", d.value);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 pure-Gaussian detection", ac1},
      {"AC2 mixture alpha sweep", ac2},
      {"AC3 mixture closed forms vs matrix oracle", ac3},
      {"AC4 block-determinant identity", ac4},
      {"AC5 Simon-criterion equivalence", ac5},
      {"AC6 polynomial vs determinant", ac6},
      {"AC7 separability soundness", ac7},
      {"AC8 det V bound", ac8},
      {"AC9 tomogram round trip", ac9},
      {"AC10 discriminant caveat", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    failed += o.pass ? 0 : 1;
  }
  fs::remove_all(scratch());
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
