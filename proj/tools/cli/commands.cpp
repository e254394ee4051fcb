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

#include "cvsep/gaussian.hpp"
#include "cvsep/tomogram.hpp"
#include "cvsep/uncertainty.hpp"

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cli/state_io.hpp"

namespace cvsep::cli {
namespace {

using nlohmann::json;

constexpr const char* kDescription = R"(cvsep: entanglement tests for continuous-variable states.

State files are JSON: {"n_modes": N, "mean": [...], "cov": [[...]]}. Rows and
columns of "cov" follow the interleaved ordering q1, p1, q2, p2, ...

Exit codes: 0 physical / not detected, 1 usage or I/O error, 2 unphysical
state, 3 entanglement detected. A scaled determinant of exactly 0 counts as
not detected: the separability condition is the inequality det >= 0.)";

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<double> row(static_cast<std::size_t>(m.cols()));
    for (Eigen::Index k = 0; k < m.cols(); ++k) row[static_cast<std::size_t>(k)] = m(i, k);
    rows.push_back(row);
  }
  return rows;
}

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

struct GridFlags {
  double x_max = 10.0;
  std::size_t points = 101;
  std::string spacing = "log";
  std::optional<double> tol;

  SweepConfig config() const {
    SweepConfig cfg;
    cfg.x_max = x_max;
    cfg.points_per_sign = points;
    cfg.spacing = spacing == "linear" ? Spacing::kLinear : Spacing::kLog;
    cfg.tolerance = tol;
    cfg.validate();
    return cfg;
  }
};

struct PureFlags {
  double m11 = 0.5;
  double m22 = 0.5;
  double m = 0.4;
};

struct MixFlags {
  double alpha = 0.5;
  PureFlags first;
  PureFlags second{0.5, 0.5, -0.4};

  GaussianMixtureParams params(double a) const {
    return GaussianMixtureParams(a, PureGaussianParams(first.m11, first.m22, first.m),
                                 PureGaussianParams(second.m11, second.m22, second.m));
  }
};

void add_mix_flags(CLI::App* app, MixFlags& f) {
  app->add_option("--m11", f.first.m11, "M[1,1] of the first component")->capture_default_str();
  app->add_option("--m22", f.first.m22, "M[2,2] of the first component")->capture_default_str();
  app->add_option("--m", f.first.m, "M[1,2] of the first component")->capture_default_str();
  app->add_option("--n11", f.second.m11, "N[1,1] of the second component")->capture_default_str();
  app->add_option("--n22", f.second.m22, "N[2,2] of the second component")->capture_default_str();
  app->add_option("--n", f.second.m, "N[1,2] of the second component")->capture_default_str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
  if (!f) throw InputError("failed writing " + path);
}

int cmd_check(const std::string& state_path, double tol_rel, std::ostream& out) {
  Tolerance tol;
  tol.rel = tol_rel;
  const DispersionMatrix v = read_state(state_path, tol);
  const RsCheck rs = rs_check(v, tol);
  json j = {{"physical", rs.physical},
            {"min_eig", rs.min_eig},
            {"det_c", rs.det_c},
            {"mode_block_determinants", mode_block_determinants(v)}};
  if (rs.physical) {
    const DetVBound b = det_v_bound(v, tol);
    j["det_v_bound"] = {{"det_v", b.det_v}, {"bound", b.bound}, {"holds", b.holds}};
  } else {
    j["det_v_bound"] = nullptr;
  }
  out << j.dump(2) << "\n";
  return rs.physical ? kExitOk : kExitUnphysical;
}

int cmd_test(const std::string& state_path, std::optional<std::size_t> mode,
             const GridFlags& flags, std::ostream& out) {
  const DispersionMatrix v = read_state(state_path);
  VerdictReport report;
  report.grid = flags.config();
  if (mode) {
    report.test = "mode-vs-rest";
    report.mode = *mode;
    report.verdict = sweep_mode_vs_rest(v, *mode, report.grid);
  } else {
    if (v.n_modes() != 2) {
      throw InputError("--two-mode needs a two-mode state; use --mode k for " +
                       std::to_string(v.n_modes()) + " modes");
    }
    report.verdict = sweep_two_mode(v, report.grid);
  }
  out << report_to_json(report).dump(2) << "\n";
  switch (report.verdict.status) {
    case Status::kEntangled:
      return kExitEntangled;
    case Status::kUnphysical:
      return kExitUnphysical;
    case Status::kNotDetected:
      break;
  }
  return kExitOk;
}

int write_gaussian(const DispersionMatrix& v, const std::string& path, std::ostream& out) {
  write_state(path, v);
  const RsCheck rs = rs_check(v);
  out << json{{"output", path}, {"det_c", rs.det_c}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep_alpha(const MixFlags& flags, double step, double tol, const std::string& path,
                    std::ostream& out) {
  if (!(step > 0.0 && step <= 0.5)) throw InputError("--step must lie in (0, 0.5]");
  std::vector<double> alphas;
  const auto n = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
  for (std::size_t i = 0; i <= n; ++i) alphas.push_back(std::min(static_cast<double>(i) * step, 1.0));
  if (alphas.back() < 1.0 - 1e-12) alphas.push_back(1.0);

  std::ostringstream csv;
  csv << "alpha,det_cx_timereversal,status\n";
  for (double a : alphas) {
    const double det = det_cmix_time_reversed(flags.params(a));
    const Status s = det >= -tol ? Status::kNotDetected : Status::kEntangled;
    csv << format_csv_number(a) << "," << format_csv_number(det) << "," << to_string(s) << "\n";
  }
  write_output(path, csv.str(), out);
  return kExitOk;
}

struct QuadFlags {
  bool numeric = false;
  std::size_t points = 2001;
  std::size_t points_2d = 401;
  double span_sigmas = 10.0;

  QuadratureConfig config() const {
    return QuadratureConfig{points, points_2d, span_sigmas};
  }
};

// Tomograms only see centred moments; displacement is dropped.
GaussianTomogram centred_tomogram(const DispersionMatrix& v) {
  return GaussianTomogram(DispersionMatrix(v.cov()));
}

int cmd_tomogram(const std::string& state_path, const QuadFlags& flags, std::ostream& out) {
  const DispersionMatrix v = read_state(state_path);
  const GaussianTomogram t = centred_tomogram(v);
  const DispersionMatrix rebuilt =
      flags.numeric ? extract_dispersion_numeric(t, flags.config()) : extract_dispersion(t);
  json j = {{"method", flags.numeric ? "numeric" : "analytic"},
            {"n_modes", rebuilt.n_modes()},
            {"cov", matrix_to_json(rebuilt.matrix())},
            {"max_abs_deviation", (rebuilt.matrix() - v.matrix()).cwiseAbs().maxCoeff()}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_sample(const std::string& state_path, const std::vector<double>& mu,
               const std::vector<double>& nu, std::vector<std::size_t> modes,
               const QuadFlags& flags, const std::string& path, std::ostream& out) {
  const DispersionMatrix v = read_state(state_path);
  const GaussianTomogram t = centred_tomogram(v);
  const Eigen::VectorXd m = to_vector(mu);
  const Eigen::VectorXd n = to_vector(nu);
  if (modes.empty()) {
    for (std::size_t i = 0; i < v.n_modes(); ++i) {
      if (mu.at(i) != 0.0 || nu.at(i) != 0.0) modes.push_back(i + 1);
    }
  }
  std::vector<std::size_t> axes;
  std::vector<GridAxis> grid;
  const Eigen::MatrixXd s = t.sigma(m, n);
  const std::size_t count = modes.size() == 1 ? flags.points : flags.points_2d;
  for (std::size_t mode : modes) {
    if (mode < 1 || mode > v.n_modes()) throw InputError("--axes entries must be mode numbers");
    axes.push_back(mode - 1);
    const double sd = std::sqrt(s(static_cast<Eigen::Index>(mode - 1), static_cast<Eigen::Index>(mode - 1)));
    grid.push_back(GridAxis{-flags.span_sigmas * sd, flags.span_sigmas * sd, count});
  }
  const SampledTomogram st = sample_tomogram(t, m, n, axes, grid);
  write_sampled_tomogram(path, st);
  out << json{{"output", path}, {"sidecar", sidecar_path(path).string()}, {"points", st.point_count()}}
             .dump(2)
      << "\n";
  return kExitOk;
}

int cmd_moments(const std::string& csv_path, std::ostream& out) {
  const Moments m = numeric_moments(read_sampled_tomogram(csv_path));
  json j = {{"mean", std::vector<double>(m.mean.data(), m.mean.data() + m.mean.size())},
            {"sigma", matrix_to_json(m.sigma)},
            {"mass", m.mass}};
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_random(std::size_t n_modes, std::uint64_t seed, bool separable, const std::string& path,
               std::ostream& out) {
  if (n_modes == 0) throw InputError("--modes must be at least 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> excess(2.0);
  Eigen::MatrixXd thermal = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) {
    const double nu = 0.5 + excess(rng);
    thermal(2 * j, 2 * j) = nu;
    thermal(2 * j + 1, 2 * j + 1) = nu;
  }
  SymplecticTransform s = random_symplectic(n_modes, seed);
  if (separable) {
    std::vector<SymplecticTransform> blocks;
    for (std::size_t j = 0; j < n_modes; ++j) blocks.push_back(random_symplectic(1, seed + 1 + j));
    s = SymplecticTransform::local(blocks);
  }
  const DispersionMatrix v =
      apply_symplectic(DispersionMatrix(RealSymMatrix::symmetrize_validate(thermal)), s);
  if (path.empty() || path == "-") {
    out << state_to_json(v).dump(2) << "\n";
  } else {
    write_state(path, v);
  }
  return kExitOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{kDescription, "cvsep"};
  app.set_version_flag("--version", CVSEP_VERSION);
  app.require_subcommand(1);

  std::string state_path;
  std::string output;
  double tol_rel = 1e-10;

  auto* check = app.add_subcommand("check", "Robertson-Schrodinger check of a state file");
  check->add_option("state", state_path, "state JSON file")->required();
  check->add_option("--tol", tol_rel, "relative tolerance")->capture_default_str();

  GridFlags grid;
  std::optional<std::size_t> mode;
  bool two_mode = false;
  auto* test = app.add_subcommand("test", "partial scaling separability test");
  test->add_option("state", state_path, "state JSON file")->required();
  auto* mode_opt = test->add_option("--mode", mode, "scale the momentum of mode k (from 1) against the rest");
  test->add_flag("--two-mode", two_mode, "two-mode test with exact polynomial minimisation (default)")
      ->excludes(mode_opt);
  test->add_option("--grid-xmax", grid.x_max, "largest |x| on the eigenvalue grid")->capture_default_str();
  test->add_option("--grid-points", grid.points, "grid points per sign")->capture_default_str();
  test->add_option("--grid-spacing", grid.spacing, "log or linear")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
  test->add_option("--tol", grid.tol, "eigenvalue threshold (default 1e-9 * maxabs(V)^2)");

  PureFlags pure_flags;
  MixFlags mix_flags;
  auto* gaussian = app.add_subcommand("gaussian", "write the state file of a two-mode Gaussian");
  gaussian->require_subcommand(1);
  auto* pure = gaussian->add_subcommand("pure", "pure Gaussian with matrix M");
  pure->add_option("--m11", pure_flags.m11)->capture_default_str();
  pure->add_option("--m22", pure_flags.m22)->capture_default_str();
  pure->add_option("--m", pure_flags.m)->capture_default_str();
  pure->add_option("-o,--output", output, "output state file")->required();
  auto* mix = gaussian->add_subcommand("mix", "alpha * pure(M) + (1 - alpha) * pure(N)");
  mix->add_option("--alpha", mix_flags.alpha)->capture_default_str();
  add_mix_flags(mix, mix_flags);
  mix->add_option("-o,--output", output, "output state file")->required();

  MixFlags sweep_flags;
  double step = 0.01;
  double sweep_tol = 1e-10;
  auto* sweep = app.add_subcommand("sweep-alpha",
                                   "time-reversed mixture determinant as a function of alpha (CSV)");
  add_mix_flags(sweep, sweep_flags);
  sweep->add_option("--step", step, "alpha step in (0, 0.5]")->capture_default_str();
  sweep->add_option("--tol", sweep_tol, "determinants >= -tol are NOT_DETECTED")->capture_default_str();
  sweep->add_option("-o,--output", output, "CSV path (stdout if omitted)");

  QuadFlags quad;
  auto* tomo = app.add_subcommand("tomogram", "rebuild the dispersion matrix from the state's tomogram");
  tomo->add_option("state", state_path, "state JSON file")->required();
  tomo->add_flag("--numeric", quad.numeric, "use quadrature of sampled tomograms");
  tomo->add_option("--points", quad.points, "grid points for 1-D marginals")->capture_default_str();
  tomo->add_option("--points-2d", quad.points_2d, "grid points per axis for 2-D marginals")
      ->capture_default_str();
  tomo->add_option("--span-sigmas", quad.span_sigmas, "grid half-width in standard deviations")
      ->capture_default_str();

  std::vector<double> mu;
  std::vector<double> nu;
  std::vector<std::size_t> axes;
  auto* sample = app.add_subcommand("sample", "sample a marginal tomogram to CSV + JSON sidecar");
  sample->add_option("state", state_path, "state JSON file")->required();
  sample->add_option("--mu", mu, "mu, one per mode")->delimiter(',')->required();
  sample->add_option("--nu", nu, "nu, one per mode")->delimiter(',')->required();
  sample->add_option("--axes", axes, "mode numbers to sample (default: modes with nonzero direction)")
      ->delimiter(',');
  sample->add_option("--points", quad.points, "points for a 1-D grid")->capture_default_str();
  sample->add_option("--points-2d", quad.points_2d, "points per axis otherwise")->capture_default_str();
  sample->add_option("--span-sigmas", quad.span_sigmas)->capture_default_str();
  sample->add_option("-o,--output", output, "CSV path")->required();

  std::string samples_path;
  auto* moments = app.add_subcommand("moments", "quadrature moments of a sampled tomogram CSV");
  moments->add_option("samples", samples_path, "CSV written by 'sample'")->required();

  std::size_t n_modes = 2;
  std::uint64_t seed = 0;
  bool separable = false;
  auto* random = app.add_subcommand("random", "random physical state (replay property-test seeds)");
  random->add_option("--modes", n_modes)->capture_default_str();
  random->add_option("--seed", seed)->capture_default_str();
  random->add_flag("--separable", separable, "product of single-mode states");
  random->add_option("-o,--output", output, "output state file (stdout if omitted)");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(state_path, tol_rel, out);
    if (test->parsed()) return cmd_test(state_path, mode, grid, out);
    if (pure->parsed()) {
      return write_gaussian(
          pure_covariance(PureGaussianParams(pure_flags.m11, pure_flags.m22, pure_flags.m)), output,
          out);
    }
    if (mix->parsed()) return write_gaussian(mixture_covariance(mix_flags.params(mix_flags.alpha)), output, out);
    if (sweep->parsed()) return cmd_sweep_alpha(sweep_flags, step, sweep_tol, output, out);
    if (tomo->parsed()) return cmd_tomogram(state_path, quad, out);
    if (sample->parsed()) return cmd_sample(state_path, mu, nu, axes, quad, output, out);
    if (moments->parsed()) return cmd_moments(samples_path, out);
    if (random->parsed()) return cmd_random(n_modes, seed, separable, output, out);
  } catch (const std::exception& e) {
    err << "cvsep: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), out, err);
}

}  // namespace cvsep::cli
