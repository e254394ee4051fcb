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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "cvsep/criterion.hpp"
#include "cvsep/tomogram.hpp"
#include "cvsep/uncertainty.hpp"

namespace cvsep::cli {

/// Thrown for malformed or unreadable input files; maps to exit code 1.
class InputError : public Error {
  using Error::Error;
};

// State files:
//   {"n_modes": N, "mean": [2N numbers], "cov": [[2N numbers] x 2N]}
// with canonical ordering (q1, p1, q2, p2, ...). "mean" may be omitted.
DispersionMatrix parse_state(const nlohmann::json& j, Tolerance tol = {});
DispersionMatrix read_state(const std::filesystem::path& path, Tolerance tol = {});
nlohmann::json state_to_json(const DispersionMatrix& v);
void write_state(const std::filesystem::path& path, const DispersionMatrix& v);

/// A Verdict together with the settings that produced it.
struct VerdictReport {
  std::string tool = "cvsep";
  std::string version = CVSEP_VERSION;
  std::string test = "two-mode";  // or "mode-vs-rest"
  std::optional<std::size_t> mode;
  Verdict verdict;
  SweepConfig grid;

  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

nlohmann::json report_to_json(const VerdictReport& r);
VerdictReport report_from_json(const nlohmann::json& j);

// Sampled tomograms: CSV "X<k>[,X<l>...],density" (k = mode number) plus a
// JSON sidecar at "<csv>.json" holding {"mu", "nu", "axes", "grid"}.
void write_sampled_tomogram(const std::filesystem::path& csv_path, const SampledTomogram& st);
SampledTomogram read_sampled_tomogram(const std::filesystem::path& csv_path);
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// Fixed 9-significant-digit formatting used in every CSV output.
std::string format_csv_number(double v);

}  // namespace cvsep::cli
