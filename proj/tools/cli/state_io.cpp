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

#include "cli/state_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace cvsep::cli {

using nlohmann::json;

namespace {

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> read_optional_number(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

json vector_to_json(const Eigen::VectorXd& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

Eigen::VectorXd vector_from_json(const json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

}  // namespace

DispersionMatrix parse_state(const json& j, Tolerance tol) {
  try {
    if (!j.is_object()) throw InputError("state must be a JSON object");
    const auto n_modes = j.at("n_modes").get<std::size_t>();
    const auto rows = j.at("cov").get<std::vector<std::vector<double>>>();
    const std::size_t dim = 2 * n_modes;
    if (n_modes == 0 || rows.size() != dim) {
      throw InputError("cov must have 2*n_modes rows");
    }
    Eigen::MatrixXd raw(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      if (rows[i].size() != dim) throw InputError("cov row " + std::to_string(i) + " has wrong length");
      for (std::size_t k = 0; k < dim; ++k) raw(i, k) = rows[i][k];
    }
    Eigen::VectorXd mean = Eigen::VectorXd::Zero(dim);
    if (j.contains("mean")) {
      mean = vector_from_json(j.at("mean"));
      if (mean.size() != static_cast<Eigen::Index>(dim)) {
        throw InputError("mean must have 2*n_modes entries");
      }
    }
    return DispersionMatrix(RealSymMatrix::symmetrize_validate(raw, tol), mean);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid state file: ") + e.what());
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(std::string("invalid state: ") + e.what());
  }
}

DispersionMatrix read_state(const std::filesystem::path& path, Tolerance tol) {
  return parse_state(read_json_file(path), tol);
}

json state_to_json(const DispersionMatrix& v) {
  json cov = json::array();
  for (Eigen::Index i = 0; i < v.matrix().rows(); ++i) {
    cov.push_back(vector_to_json(v.matrix().row(i).transpose()));
  }
  return json{{"n_modes", v.n_modes()}, {"mean", vector_to_json(v.mean())}, {"cov", cov}};
}

void write_state(const std::filesystem::path& path, const DispersionMatrix& v) {
  write_text_file(path, state_to_json(v).dump(2) + "\n");
}

json report_to_json(const VerdictReport& r) {
  const Verdict& v = r.verdict;
  json diag = json::object();
  if (v.diagnostics.coeffs) {
    diag["coeffs"] = {{"a", v.diagnostics.coeffs->a},
                      {"b", v.diagnostics.coeffs->b},
                      {"c", v.diagnostics.coeffs->c}};
  } else {
    diag["coeffs"] = nullptr;
  }
  diag["discriminant"] = optional_number(v.diagnostics.discriminant);
  diag["simon_lhs"] = optional_number(v.diagnostics.simon_lhs);
  diag["simon_rhs"] = optional_number(v.diagnostics.simon_rhs);

  json grid = {{"x_min", r.grid.x_min},
               {"x_max", r.grid.x_max},
               {"points_per_sign", r.grid.points_per_sign},
               {"spacing", r.grid.spacing == Spacing::kLog ? "log" : "linear"},
               {"include_time_reversal", r.grid.include_time_reversal},
               {"tolerance", optional_number(r.grid.tolerance)}};

  return json{{"tool", r.tool},
              {"version", r.version},
              {"test", r.test},
              {"mode", r.mode ? json(*r.mode) : json(nullptr)},
              {"status", std::string(to_string(v.status))},
              {"witness", v.witness ? json(v.witness->values()) : json(nullptr)},
              {"min_det", v.min_det},
              {"min_eig", v.min_eig},
              {"tolerance", v.tolerance},
              {"diagnostics", diag},
              {"grid", grid}};
}

VerdictReport report_from_json(const json& j) {
  try {
    VerdictReport r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.test = j.at("test").get<std::string>();
    if (!j.at("mode").is_null()) r.mode = j.at("mode").get<std::size_t>();

    Verdict& v = r.verdict;
    v.status = status_from_string(j.at("status").get<std::string>());
    if (!j.at("witness").is_null()) v.witness = ScalingVector(j.at("witness").get<std::vector<double>>());
    v.min_det = j.at("min_det").get<double>();
    v.min_eig = j.at("min_eig").get<double>();
    v.tolerance = j.at("tolerance").get<double>();

    const json& diag = j.at("diagnostics");
    if (!diag.at("coeffs").is_null()) {
      const json& c = diag.at("coeffs");
      v.diagnostics.coeffs =
          TwoModeCoeffs{c.at("a").get<double>(), c.at("b").get<double>(), c.at("c").get<double>()};
    }
    v.diagnostics.discriminant = read_optional_number(diag, "discriminant");
    v.diagnostics.simon_lhs = read_optional_number(diag, "simon_lhs");
    v.diagnostics.simon_rhs = read_optional_number(diag, "simon_rhs");

    const json& g = j.at("grid");
    r.grid.x_min = g.at("x_min").get<double>();
    r.grid.x_max = g.at("x_max").get<double>();
    r.grid.points_per_sign = g.at("points_per_sign").get<std::size_t>();
    r.grid.spacing = g.at("spacing").get<std::string>() == "log" ? Spacing::kLog : Spacing::kLinear;
    r.grid.include_time_reversal = g.at("include_time_reversal").get<bool>();
    r.grid.tolerance = read_optional_number(g, "tolerance");
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid verdict report: ") + e.what());
  }
}

std::string format_csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  return std::filesystem::path(csv_path.string() + ".json");
}

void write_sampled_tomogram(const std::filesystem::path& csv_path, const SampledTomogram& st) {
  st.validate();
  std::ostringstream csv;
  for (std::size_t a : st.axes) csv << "X" << (a + 1) << ",";
  csv << "density\n";

  const std::size_t d = st.axes.size();
  std::vector<std::size_t> idx(d, 0);
  for (double value : st.values) {
    for (std::size_t a = 0; a < d; ++a) csv << format_csv_number(st.grid[a].at(idx[a])) << ",";
    csv << format_csv_number(value) << "\n";
    for (std::size_t a = d; a-- > 0;) {
      if (++idx[a] < st.grid[a].count) break;
      idx[a] = 0;
    }
  }
  write_text_file(csv_path, csv.str());

  json grid = json::array();
  for (const GridAxis& g : st.grid) {
    grid.push_back({{"min", g.min}, {"max", g.max}, {"count", g.count}});
  }
  std::vector<std::size_t> modes;
  for (std::size_t a : st.axes) modes.push_back(a + 1);
  json side = {{"mu", vector_to_json(st.mu)},
               {"nu", vector_to_json(st.nu)},
               {"axes", modes},
               {"grid", grid}};
  write_text_file(sidecar_path(csv_path), side.dump(2) + "\n");
}

SampledTomogram read_sampled_tomogram(const std::filesystem::path& csv_path) {
  SampledTomogram st;
  try {
    const json side = read_json_file(sidecar_path(csv_path));
    st.mu = vector_from_json(side.at("mu"));
    st.nu = vector_from_json(side.at("nu"));
    for (std::size_t m : side.at("axes").get<std::vector<std::size_t>>()) {
      if (m == 0) throw InputError("sidecar axes are mode numbers starting at 1");
      st.axes.push_back(m - 1);
    }
    for (const json& g : side.at("grid")) {
      st.grid.push_back(GridAxis{g.at("min").get<double>(), g.at("max").get<double>(),
                                 g.at("count").get<std::size_t>()});
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid tomogram sidecar: ") + e.what());
  }

  std::ifstream in(csv_path);
  if (!in) throw InputError("cannot open " + csv_path.string());
  std::string line;
  if (!std::getline(in, line)) throw InputError("empty tomogram CSV");
  std::size_t columns = 1;
  for (char ch : line) columns += ch == ',' ? 1 : 0;
  if (columns != st.axes.size() + 1 || line.substr(line.rfind(',') + 1) != "density") {
    throw InputError("tomogram CSV header does not match its sidecar");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto pos = line.rfind(',');
    try {
      st.values.push_back(std::stod(line.substr(pos + 1)));
    } catch (const std::exception&) {
      throw InputError("bad density value in tomogram CSV: " + line);
    }
  }
  try {
    st.validate();
  } catch (const Error& e) {
    throw InputError(std::string("inconsistent sampled tomogram: ") + e.what());
  }
  return st;
}

}  // namespace cvsep::cli
