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

#include "cvsep/tomogram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace cvsep {
namespace {

// Row i of L: mu_i at column 2i, nu_i at column 2i+1.
Eigen::MatrixXd direction_matrix(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) {
  const Eigen::Index n = mu.size();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    l(i, 2 * i) = mu(i);
    l(i, 2 * i + 1) = nu(i);
  }
  return l;
}

void check_direction_sizes(std::size_t n_modes, const Eigen::VectorXd& mu,
                           const Eigen::VectorXd& nu) {
  if (mu.size() != static_cast<Eigen::Index>(n_modes) ||
      nu.size() != static_cast<Eigen::Index>(n_modes)) {
    throw DimensionError("mu and nu need one entry per mode (" + std::to_string(n_modes) +
                         ")");
  }
}

Eigen::MatrixXd restrict(const Eigen::MatrixXd& s, const std::vector<std::size_t>& axes) {
  const auto d = static_cast<Eigen::Index>(axes.size());
  Eigen::MatrixXd r(d, d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      r(a, b) = s(static_cast<Eigen::Index>(axes[a]), static_cast<Eigen::Index>(axes[b]));
    }
  }
  return r;
}

// Zero-mean multivariate normal density with a fixed covariance.
class NormalKernel {
 public:
  explicit NormalKernel(const Eigen::MatrixXd& cov) : dim_(cov.rows()) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov);
    const double top = es.eigenvalues().cwiseAbs().maxCoeff();
    if (es.info() != Eigen::Success || !(top > 0.0) ||
        es.eigenvalues().minCoeff() <= 1e-13 * top) {
      throw DegenerateDirectionError(
          "tomographic covariance is singular for these directions");
    }
    inv_ = cov.inverse();
    const double log_det = es.eigenvalues().array().log().sum();
    log_norm_ = -0.5 * (static_cast<double>(dim_) * std::log(2.0 * std::numbers::pi) + log_det);
  }

  double operator()(const double* x) const {
    double quad = 0.0;
    for (Eigen::Index a = 0; a < dim_; ++a) {
      double row = 0.0;
      for (Eigen::Index b = 0; b < dim_; ++b) row += inv_(a, b) * x[b];
      quad += x[a] * row;
    }
    return std::exp(log_norm_ - 0.5 * quad);
  }

 private:
  Eigen::Index dim_;
  Eigen::MatrixXd inv_;
  double log_norm_ = 0.0;
};

// Neumaier compensated sum with a fixed accumulation order.
class Accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

Eigen::VectorXd unit(std::size_t n, std::size_t i) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  e(static_cast<Eigen::Index>(i)) = 1.0;
  return e;
}

// One tomographic dispersion entry S_ab(mu, nu), as the extraction recipe
// needs it.
using SigmaEntry = double (*)(const GaussianTomogram&, const Eigen::VectorXd&,
                              const Eigen::VectorXd&, std::size_t, std::size_t,
                              const QuadratureConfig*);

double analytic_entry(const GaussianTomogram& t, const Eigen::VectorXd& mu,
                      const Eigen::VectorXd& nu, std::size_t a, std::size_t b,
                      const QuadratureConfig*) {
  return t.sigma(mu, nu)(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
}

double numeric_entry(const GaussianTomogram& t, const Eigen::VectorXd& mu,
                     const Eigen::VectorXd& nu, std::size_t a, std::size_t b,
                     const QuadratureConfig* cfg) {
  const Eigen::MatrixXd s = t.sigma(mu, nu);
  std::vector<std::size_t> axes = {a};
  if (b != a) axes.push_back(b);
  std::vector<GridAxis> grid;
  for (std::size_t ax : axes) {
    const double sd = std::sqrt(s(static_cast<Eigen::Index>(ax), static_cast<Eigen::Index>(ax)));
    const double half = cfg->span_sigmas * sd;
    grid.push_back(GridAxis{-half, half, axes.size() == 1 ? cfg->points_1d : cfg->points_2d});
  }
  const Moments m = numeric_moments(sample_tomogram(t, mu, nu, axes, grid));
  return m.sigma(0, axes.size() == 1 ? 0 : 1);
}

DispersionMatrix extract_with(const GaussianTomogram& t, SigmaEntry entry,
                              const QuadratureConfig* cfg) {
  const std::size_t n = t.n_modes();
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * n),
                                            static_cast<Eigen::Index>(2 * n));
  for (std::size_t j = 0; j < n; ++j) {
    const Eigen::VectorXd ej = unit(n, j);
    const auto q = static_cast<Eigen::Index>(2 * j);
    const double qq = entry(t, ej, zero, j, j, cfg);
    const double pp = entry(t, zero, ej, j, j, cfg);
    const double both = entry(t, ej, ej, j, j, cfg);
    v(q, q) = qq;
    v(q + 1, q + 1) = pp;
    v(q, q + 1) = v(q + 1, q) = 0.5 * (both - qq - pp);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const Eigen::VectorXd ej = unit(n, j);
      const Eigen::VectorXd ek = unit(n, k);
      const auto qj = static_cast<Eigen::Index>(2 * j);
      const auto qk = static_cast<Eigen::Index>(2 * k);
      // q_j with p_k.
      v(qj, qk + 1) = v(qk + 1, qj) = entry(t, ej, ek, j, k, cfg);
      if (j < k) {
        v(qj, qk) = v(qk, qj) = entry(t, ej + ek, zero, j, k, cfg);
        v(qj + 1, qk + 1) = v(qk + 1, qj + 1) = entry(t, zero, ej + ek, j, k, cfg);
      }
    }
  }
  return DispersionMatrix(RealSymMatrix::symmetrize_validate(v));
}

}  // namespace

Eigen::MatrixXd tomographic_sigma(const DispersionMatrix& v, const Eigen::VectorXd& mu,
                                  const Eigen::VectorXd& nu) {
  check_direction_sizes(v.n_modes(), mu, nu);
  const Eigen::MatrixXd l = direction_matrix(mu, nu);
  Eigen::MatrixXd s = l * v.matrix() * l.transpose();
  return 0.5 * (s + s.transpose());
}

double tomogram_density(const DispersionMatrix& v, const Eigen::VectorXd& x,
                        const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) {
  if (x.size() != static_cast<Eigen::Index>(v.n_modes())) {
    throw DimensionError("X needs one entry per mode");
  }
  const Eigen::VectorXd centred = x - direction_matrix(mu, nu) * v.mean();
  return NormalKernel(tomographic_sigma(v, mu, nu))(centred.data());
}

GaussianTomogram::GaussianTomogram(DispersionMatrix state)
    : GaussianTomogram({Component{1.0, std::move(state)}},
                       Eigen::VectorXd(), Eigen::VectorXd()) {}

GaussianTomogram::GaussianTomogram(std::vector<Component> components,
                                   Eigen::VectorXd mu_factor, Eigen::VectorXd nu_factor)
    : components_(std::move(components)),
      mu_factor_(std::move(mu_factor)),
      nu_factor_(std::move(nu_factor)) {
  if (components_.empty()) throw DomainError("tomogram needs at least one component");
  n_modes_ = components_.front().state.n_modes();
  double total = 0.0;
  for (const Component& c : components_) {
    if (c.state.n_modes() != n_modes_) {
      throw DimensionError("mixture components differ in mode count");
    }
    if (!c.state.mean().isZero(0.0)) {
      throw DomainError("Gaussian tomograms are only supported for zero-mean states");
    }
    if (!(c.weight >= 0.0)) throw DomainError("mixture weights must be non-negative");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("mixture weights must sum to 1");
  const auto n = static_cast<Eigen::Index>(n_modes_);
  if (mu_factor_.size() == 0) mu_factor_ = Eigen::VectorXd::Ones(n);
  if (nu_factor_.size() == 0) nu_factor_ = Eigen::VectorXd::Ones(n);
}

GaussianTomogram GaussianTomogram::mixture(std::vector<Component> components) {
  return GaussianTomogram(std::move(components), Eigen::VectorXd(), Eigen::VectorXd());
}

void GaussianTomogram::check_args(const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) const {
  check_direction_sizes(n_modes_, mu, nu);
}

double GaussianTomogram::density(const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                                 const Eigen::VectorXd& nu) const {
  std::vector<std::size_t> all(n_modes_);
  for (std::size_t i = 0; i < n_modes_; ++i) all[i] = i;
  return marginal_density(all, x, mu, nu);
}

double GaussianTomogram::marginal_density(const std::vector<std::size_t>& axes,
                                          const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                                          const Eigen::VectorXd& nu) const {
  check_args(mu, nu);
  if (x.size() != static_cast<Eigen::Index>(axes.size())) {
    throw DimensionError("X needs one entry per listed axis");
  }
  for (std::size_t a : axes) {
    if (a >= n_modes_) throw IndexError("axis " + std::to_string(a) + " out of range");
  }
  const Eigen::VectorXd m = mu.cwiseProduct(mu_factor_);
  const Eigen::VectorXd n = nu.cwiseProduct(nu_factor_);
  double total = 0.0;
  for (const Component& c : components_) {
    const Eigen::MatrixXd s = restrict(tomographic_sigma(c.state, m, n), axes);
    total += c.weight * NormalKernel(s)(x.data());
  }
  return total;
}

std::vector<std::pair<double, Eigen::MatrixXd>> GaussianTomogram::component_sigmas(
    const Eigen::VectorXd& mu, const Eigen::VectorXd& nu) const {
  check_args(mu, nu);
  const Eigen::VectorXd m = mu.cwiseProduct(mu_factor_);
  const Eigen::VectorXd n = nu.cwiseProduct(nu_factor_);
  std::vector<std::pair<double, Eigen::MatrixXd>> out;
  out.reserve(components_.size());
  for (const Component& c : components_) {
    out.emplace_back(c.weight, tomographic_sigma(c.state, m, n));
  }
  return out;
}

Eigen::MatrixXd GaussianTomogram::sigma(const Eigen::VectorXd& mu,
                                        const Eigen::VectorXd& nu) const {
  check_args(mu, nu);
  const Eigen::VectorXd m = mu.cwiseProduct(mu_factor_);
  const Eigen::VectorXd n = nu.cwiseProduct(nu_factor_);
  const auto dim = static_cast<Eigen::Index>(n_modes_);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(dim, dim);
  for (const Component& c : components_) s += c.weight * tomographic_sigma(c.state, m, n);
  return s;
}

GaussianTomogram GaussianTomogram::scaled(const Eigen::VectorXd& lambda_q,
                                          const Eigen::VectorXd& lambda_p) const {
  check_direction_sizes(n_modes_, lambda_q, lambda_p);
  if ((lambda_q.array() == 0.0).any() || (lambda_p.array() == 0.0).any()) {
    throw ZeroScaleError("tomogram scaling factors must be nonzero");
  }
  return GaussianTomogram(components_, mu_factor_.cwiseQuotient(lambda_q),
                          nu_factor_.cwiseQuotient(lambda_p));
}

GaussianTomogram scale_tomogram(const GaussianTomogram& t, const Eigen::VectorXd& lambda_q,
                                const Eigen::VectorXd& lambda_p) {
  return t.scaled(lambda_q, lambda_p);
}

DispersionMatrix extract_dispersion(const GaussianTomogram& t) {
  return extract_with(t, &analytic_entry, nullptr);
}

DispersionMatrix extract_dispersion_numeric(const GaussianTomogram& t,
                                            const QuadratureConfig& cfg) {
  return extract_with(t, &numeric_entry, &cfg);
}

double GridAxis::at(std::size_t i) const {
  if (i + 1 == count) return max;
  return min + static_cast<double>(i) * step();
}

std::size_t SampledTomogram::point_count() const {
  std::size_t n = grid.empty() ? 0 : 1;
  for (const GridAxis& g : grid) n *= g.count;
  return n;
}

void SampledTomogram::validate() const {
  if (mu.size() != nu.size()) throw DimensionError("mu and nu differ in length");
  if (axes.empty() || axes.size() != grid.size()) {
    throw DimensionError("sampled tomogram needs one grid axis per sampled X component");
  }
  for (std::size_t a : axes) {
    if (a >= static_cast<std::size_t>(mu.size())) throw IndexError("sampled axis out of range");
  }
  for (const GridAxis& g : grid) {
    if (g.count < 3) throw GridTooCoarseError("grid axes need at least 3 points");
    if (!(g.max > g.min)) throw DimensionError("grid axis needs max > min");
  }
  if (values.size() != point_count()) {
    throw DimensionError("sampled values do not match the grid size");
  }
  for (double v : values) {
    if (!(v >= 0.0)) throw DomainError("tomogram samples must be non-negative");
  }
}

SampledTomogram sample_tomogram(const GaussianTomogram& t, const Eigen::VectorXd& mu,
                                const Eigen::VectorXd& nu, std::vector<std::size_t> axes,
                                std::vector<GridAxis> grid) {
  SampledTomogram st{mu, nu, std::move(axes), std::move(grid), {}};
  if (st.axes.empty() || st.axes.size() != st.grid.size()) {
    throw DimensionError("one grid axis per sampled X component is required");
  }
  for (std::size_t a : st.axes) {
    if (a >= t.n_modes()) throw IndexError("sampled axis out of range");
  }
  for (const GridAxis& g : st.grid) {
    if (g.count < 3) throw GridTooCoarseError("grid axes need at least 3 points");
  }

  std::vector<std::pair<double, NormalKernel>> kernels;
  for (const auto& [w, s] : t.component_sigmas(mu, nu)) {
    kernels.emplace_back(w, NormalKernel(restrict(s, st.axes)));
  }

  const std::size_t d = st.axes.size();
  const std::size_t total = st.point_count();
  st.values.resize(total);
  std::vector<std::size_t> idx(d, 0);
  std::vector<double> x(d);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t a = 0; a < d; ++a) x[a] = st.grid[a].at(idx[a]);
    double value = 0.0;
    for (const auto& [w, k] : kernels) value += w * k(x.data());
    st.values[flat] = value;
    for (std::size_t a = d; a-- > 0;) {
      if (++idx[a] < st.grid[a].count) break;
      idx[a] = 0;
    }
  }
  return st;
}

Moments numeric_moments(const SampledTomogram& st) {
  st.validate();
  const std::size_t d = st.axes.size();

  // Trapezoid weights: half weight on the end points of every axis.
  auto weight = [&](const std::vector<std::size_t>& idx) {
    double w = 1.0;
    for (std::size_t a = 0; a < d; ++a) {
      w *= st.grid[a].step();
      if (idx[a] == 0 || idx[a] + 1 == st.grid[a].count) w *= 0.5;
    }
    return w;
  };
  auto for_each_point = [&](auto&& fn) {
    std::vector<std::size_t> idx(d, 0);
    std::vector<double> x(d);
    for (std::size_t flat = 0; flat < st.values.size(); ++flat) {
      for (std::size_t a = 0; a < d; ++a) x[a] = st.grid[a].at(idx[a]);
      fn(x, weight(idx) * st.values[flat]);
      for (std::size_t a = d; a-- > 0;) {
        if (++idx[a] < st.grid[a].count) break;
        idx[a] = 0;
      }
    }
  };

  Accumulator mass;
  std::vector<Accumulator> first(d);
  for_each_point([&](const std::vector<double>& x, double wv) {
    mass.add(wv);
    for (std::size_t a = 0; a < d; ++a) first[a].add(wv * x[a]);
  });

  Moments out;
  out.mass = mass.value();
  if (!(std::abs(out.mass - 1.0) <= 1e-3)) {
    throw GridTooCoarseError("sampled tomogram integrates to " + std::to_string(out.mass) +
                             " instead of 1");
  }
  out.mean = Eigen::VectorXd(static_cast<Eigen::Index>(d));
  for (std::size_t a = 0; a < d; ++a) {
    out.mean(static_cast<Eigen::Index>(a)) = first[a].value() / out.mass;
  }

  std::vector<Accumulator> second(d * d);
  for_each_point([&](const std::vector<double>& x, double wv) {
    for (std::size_t a = 0; a < d; ++a) {
      const double da = x[a] - out.mean(static_cast<Eigen::Index>(a));
      for (std::size_t b = a; b < d; ++b) {
        second[a * d + b].add(wv * da * (x[b] - out.mean(static_cast<Eigen::Index>(b))));
      }
    }
  });
  out.sigma = Eigen::MatrixXd(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      const double v = second[a * d + b].value() / out.mass;
      out.sigma(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
      out.sigma(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = v;
    }
  }

  for (std::size_t a = 0; a < d; ++a) {
    const double sd = std::sqrt(out.sigma(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)));
    if (st.grid[a].max - st.grid[a].min < 8.0 * sd) {
      throw GridTooCoarseError("grid axis " + std::to_string(a) +
                               " spans fewer than 8 standard deviations");
    }
  }
  return out;
}

double homogeneity_residual(const GaussianTomogram& t, double x, double mu, double nu) {
  if (t.n_modes() != 1) throw DimensionError("homogeneity check is single-mode");
  if (x == 0.0) throw DomainError("homogeneity relation needs X != 0");
  Eigen::VectorXd xv(1), mv(1), nv(1), one(1), mv_s(1), nv_s(1);
  xv << x;
  mv << mu;
  nv << nu;
  one << 1.0;
  mv_s << mu / x;
  nv_s << nu / x;
  return std::abs(t.density(xv, mv, nv) - t.density(one, mv_s, nv_s) / std::abs(x));
}

}  // namespace cvsep
