// Copyright 2026 The Zeno Gate Authors
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

#ifndef ZENO_REPORT_HPP
#define ZENO_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zeno/analysis.hpp"

namespace zeno {

/// Library version string.
const char* version();

/// Shortest round-trip text of a double (17 significant digits).
std::string format_double(double x);

/// Settings shared by single-point evaluations and sweeps.
struct PointSpec {
  double kappa = 1e4;
  /// Unset: optimize lambda for `objective`.
  std::optional<double> lambda;
  double gamma = 1.0;
  double eta = 1.0;
  bool relative_noise = false;
  /// 0 selects continuum_n(lambda).
  int n = 0;
  DistillationMode distill = DistillationMode::full;
  Objective objective = Objective::success;
  /// equal | one-one | minus-one-one | worst-f | worst-p | "a,b,c,d"
  std::string input = "equal";
  std::uint64_t seed = 1;
  int worst_samples = 10000;

  DetectorModel detector() const;
  void validate() const;
  nlohmann::json to_json() const;
};

Objective parse_objective(const std::string& text);
const char* to_string(Objective objective);

struct ResolvedPoint {
  double lambda = 0.0;
  TwoQubitState input;
  PointEvaluation evaluation;
};

/// Resolves lambda and the input state (worst-case inputs are searched at
/// the resolved lambda, which is first optimized on equal superposition for
/// worst-f or |11> for worst-p) and evaluates the circuit.
ResolvedPoint resolve_point(const PointSpec& spec);

/// JSON report for one point: tau, chain residual, gate table, circuit and
/// closed-form metrics, error rates. Domain errors propagate.
nlohmann::json evaluate_point(const PointSpec& spec);

enum class SweepVariable { kappa, lambda, gamma_overlap };
SweepVariable parse_sweep_variable(const std::string& text);
const char* to_string(SweepVariable v);

struct SweepSpec {
  SweepVariable variable = SweepVariable::kappa;
  double start = 1e2;
  double stop = 1e8;
  int points = 25;
  bool log_spacing = true;
  PointSpec fixed{};
  std::vector<ThresholdCurve> curves;
  int jobs = 1;

  /// ConfigError naming the offending field.
  void validate() const;
  std::vector<double> values() const;
};

struct RunReport {
  nlohmann::json config;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;

  std::string csv() const;
  nlohmann::json to_json() const;
};

/// Column order: swept variable, lambda_opt, tau, fidelity, ps_per_qubit,
/// ps_two_qubit, unlocated, located, then gamma_min_<label> per curve.
/// Rows whose point is undefined carry NaN and a note.
RunReport run_sweep(const SweepSpec& spec);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Parses CSV produced by RunReport::csv. ConfigError on malformed input.
CsvTable parse_csv(const std::string& text);

}  // namespace zeno

#endif  // ZENO_REPORT_HPP
