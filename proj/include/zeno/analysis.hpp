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

#ifndef ZENO_ANALYSIS_HPP
#define ZENO_ANALYSIS_HPP

#include <functional>
#include <string>
#include <vector>

#include "zeno/gates.hpp"
#include "zeno/gc.hpp"
#include "zeno/threshold.hpp"

namespace zeno {

/// One operating point of the teleported CNOT.
struct GcPoint {
  double kappa = 1e4;
  double lambda = 0.0;
  MismatchConfig mismatch{};
  DistillationMode mode = DistillationMode::full;
  TwoQubitState input = TwoQubitState::equal_superposition();
  DetectorModel detector{};
  /// Chain segments; 0 selects continuum_n(lambda).
  int n = 0;
};

struct PointEvaluation {
  int n = 0;
  double tau = 0.0;
  GateMetrics metrics{};
  ErrorRates rates{};
};

/// Circuit metrics at one point. DomainError when the distilled gate is
/// undefined (tau <= 0).
PointEvaluation evaluate_gc_point(const GcPoint& point);

enum class Objective { success, fidelity };

struct LambdaSearchOptions {
  double lambda_min = 1e-2;
  /// 0 selects max(1e3, 30 sqrt(kappa)).
  double lambda_max = 0.0;
  int grid_points = 50;
  double rel_tol = 1e-6;
  /// Chain segments; 0 resolves continuum_n on the grid and freezes the
  /// largest bracketing value for the refinement.
  int n = 0;
};

double default_lambda_max(double kappa);

struct LambdaOptimum {
  double lambda_opt = 0.0;
  double value = 0.0;
  int n = 0;
};

/// Maximizes f(lambda, n) with a log grid followed by golden-section
/// refinement. Points where f throws DomainError are infeasible.
/// InfeasibleError when every grid point is infeasible.
LambdaOptimum maximize_over_lambda(const std::function<double(double, int)>& f, double kappa,
                                   const LambdaSearchOptions& options = {});

struct OptimizedPoint {
  LambdaOptimum optimum;
  PointEvaluation evaluation;
};

/// Optimal lambda of the circuit for the chosen objective. The objective
/// value is ps_per_qubit or the reference-branch fidelity.
OptimizedPoint optimize_lambda(double kappa, const MismatchConfig& mismatch, Objective objective,
                               const TwoQubitState& input, DistillationMode mode = DistillationMode::full,
                               const DetectorModel& detector = {}, const LambdaSearchOptions& options = {});

/// Lambda maximizing the unheralded fidelity of the raw CZ table.
LambdaOptimum optimize_raw_unheralded_fidelity(double kappa, const MismatchConfig& mismatch,
                                               const TwoQubitState& input,
                                               const LambdaSearchOptions& options = {});

struct BoundOptions {
  DistillationMode mode = DistillationMode::full;
  DetectorModel detector{};
  double gamma_tol = 1e-4;
  LambdaSearchOptions lambda{};
};

struct BoundResult {
  double kappa = 0.0;
  bool feasible = false;
  /// NaN when infeasible.
  double gamma_min = 0.0;
  double lambda_opt = 0.0;
  ErrorRates rates_at_bound{};
};

/// Tolerability at Gamma with the success-optimal lambda.
struct GammaProbe {
  bool tolerable = false;
  double lambda_opt = 0.0;
  ErrorRates rates{};
};
GammaProbe probe_gamma(double kappa, double gamma, const ThresholdCurve& curve, const TwoQubitState& input,
                       const BoundOptions& options = {});

/// Smallest Gamma whose success-optimal error rates are tolerable, by
/// bisection on [0, 1].
BoundResult gamma_min_for_kappa(double kappa, const ThresholdCurve& curve, const TwoQubitState& input,
                                const BoundOptions& options = {});

struct KappaBound {
  bool feasible = false;
  /// NaN when infeasible; kappa_lo when already tolerable there.
  double kappa_min = 0.0;
  double lambda_opt = 0.0;
  ErrorRates rates{};
};

struct KappaSearchOptions {
  double kappa_lo = 1e2;
  double kappa_hi = 1e8;
  double rel_tol = 1e-3;
  DetectorModel detector{};
  LambdaSearchOptions lambda{};
};

/// Tolerability at perfect matching. Full distillation uses the
/// success-optimal lambda; no distillation evaluates the raw gate on
/// (|00> + |01> + |10> - |11>)/2 at the lambda of largest tolerance margin.
GammaProbe probe_kappa(double kappa, const ThresholdCurve& curve, DistillationMode mode,
                       const KappaSearchOptions& options = {});

/// Smallest kappa tolerable at Gamma = 1, bisection on log kappa.
KappaBound kappa_min_at_perfect_matching(const ThresholdCurve& curve, DistillationMode mode,
                                         const KappaSearchOptions& options = {});

struct DistillationAdvantage {
  std::string label;
  KappaBound full;
  KappaBound none;
  /// kappa_min(full) < kappa_min(none), with infeasible treated as +inf.
  bool advantage = false;
  /// Both bounds at the range floor.
  bool vacuous = false;
};

DistillationAdvantage distillation_advantage_report(const ThresholdCurve& curve,
                                                    const KappaSearchOptions& options = {});

/// Targets for building a threshold curve on which the pipeline reaches
/// chosen bound values.
struct CalibrationTargets {
  std::string label;
  double kappa_gamma = 1e6;      // kappa at which Gamma_min is pinned
  double gamma_target = 0.998;   // Gamma_min at kappa_gamma, equal-superposition input
  double kappa_nodist = 12000;   // critical kappa without distillation
  double kappa_full = 6050;      // critical kappa with full distillation
  int frontier_points = 240;
};

/// Curve with vertices (0, U), (L, U) at the distilled rates for
/// (kappa_gamma, gamma_target), the Pareto frontier of the undistilled gate
/// at kappa_nodist below U, and (1 - P_s(kappa_full), 0).
ThresholdCurve calibrate_threshold_curve(const CalibrationTargets& targets);

}  // namespace zeno

#endif  // ZENO_ANALYSIS_HPP
