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

#include <benchmark/benchmark.h>

#include "cvsep/criterion.hpp"
#include "cvsep/gaussian.hpp"
#include "cvsep/tomogram.hpp"

namespace {

using namespace cvsep;

DispersionMatrix random_state(std::size_t n, std::uint64_t seed) {
  Eigen::MatrixXd thermal = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  return apply_symplectic(DispersionMatrix(RealSymMatrix::symmetrize_validate(thermal)),
                          random_symplectic(n, seed));
}

void BM_SweepTwoMode(benchmark::State& state) {
  const auto v = pure_covariance(PureGaussianParams(0.5, 0.5, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_two_mode(v));
}
BENCHMARK(BM_SweepTwoMode);

void BM_SweepModeVsRest(benchmark::State& state) {
  const auto v = random_state(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_mode_vs_rest(v, 1));
}
BENCHMARK(BM_SweepModeVsRest)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_HermitianEigenvalues(benchmark::State& state) {
  const auto c = build_uncertainty(random_state(static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(c));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_Determinant(benchmark::State& state) {
  const auto c = build_uncertainty(random_state(static_cast<std::size_t>(state.range(0)), 7));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(c));
}
BENCHMARK(BM_Determinant)->Arg(2)->Arg(8)->Arg(16);

void BM_ExtractAnalytic(benchmark::State& state) {
  const GaussianTomogram t(random_state(static_cast<std::size_t>(state.range(0)), 9));
  for (auto _ : state) benchmark::DoNotOptimize(extract_dispersion(t));
}
BENCHMARK(BM_ExtractAnalytic)->Arg(1)->Arg(4);

void BM_ExtractNumeric(benchmark::State& state) {
  const GaussianTomogram t(random_state(static_cast<std::size_t>(state.range(0)), 11));
  for (auto _ : state) benchmark::DoNotOptimize(extract_dispersion_numeric(t));
}
BENCHMARK(BM_ExtractNumeric)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
