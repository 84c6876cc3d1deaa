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

#include "zeno/analysis.hpp"

#include <gsl/gsl_min.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsl_quiet.hpp"
#include "zeno/errors.hpp"
#include "zeno/tau.hpp"

namespace zeno {

PointEvaluation evaluate_gc_point(const GcPoint& p) {
  ChainConfig cfg{p.n > 0 ? p.n : 2, p.lambda, p.kappa};
  cfg.validate();
  PointEvaluation ev;
  ev.n = p.n > 0 ? p.n : continuum_n(p.lambda);
  ev.tau = tau_closed_form(ev.n, p.lambda);
  const GateTable table = gc_gate_table(ev.tau, p.lambda, p.kappa, p.mismatch, p.mode);
  ev.metrics = GcCircuit(table).metrics(p.input, p.detector);
  ev.rates = error_rates(ev.metrics);
  return ev;
}

double default_lambda_max(double kappa) { return std::max(1e3, 30.0 * std::sqrt(kappa)); }

namespace {

constexpr double kInfeasible = -std::numeric_limits<double>::infinity();

double safe_eval(const std::function<double(double, int)>& f, double lambda, int n) {
  try {
    const double v = f(lambda, n);
    return std::isfinite(v) ? v : kInfeasible;
  } catch (const DomainError&) {
    return kInfeasible;
  }
}

struct GoldenContext {
  const std::function<double(double, int)>* f;
  int n;
};

double negated(double log_lambda, void* params) {
  auto* ctx = static_cast<GoldenContext*>(params);
  const double v = safe_eval(*ctx->f, std::exp(log_lambda), ctx->n);
  return std::isfinite(v) ? -v : 1e300;
}

}  // namespace

LambdaOptimum maximize_over_lambda(const std::function<double(double, int)>& f, double kappa,
                                   const LambdaSearchOptions& o) {
  detail::gsl_quiet();
  const double lo = std::log(o.lambda_min);
  const double hi = std::log(o.lambda_max > 0.0 ? o.lambda_max : default_lambda_max(kappa));
  if (!(o.lambda_min > 0.0) || !(hi > lo) || o.grid_points < 3)
    throw ConfigError("lambda search: invalid range or grid");

  std::vector<double> xs(o.grid_points), vs(o.grid_points);
  std::vector<int> ns(o.grid_points);
  int best = -1;
  for (int i = 0; i < o.grid_points; ++i) {
    xs[i] = lo + (hi - lo) * i / (o.grid_points - 1);
    const double lam = std::exp(xs[i]);
    ns[i] = o.n > 0 ? o.n : continuum_n(lam);
    vs[i] = safe_eval(f, lam, ns[i]);
    if (std::isfinite(vs[i]) && (best < 0 || vs[i] > vs[best])) best = i;
  }
  if (best < 0) throw InfeasibleError("lambda search: objective infeasible on the whole grid");

  LambdaOptimum out{std::exp(xs[best]), vs[best], ns[best]};
  if (best == 0 || best == o.grid_points - 1) return out;

  const int n = o.n > 0 ? o.n : std::max({ns[best - 1], ns[best], ns[best + 1]});
  GoldenContext ctx{&f, n};
  gsl_function fn{&negated, &ctx};
  const double m0 = xs[best];
  const double fm = negated(m0, &ctx);
  const double fa = negated(xs[best - 1], &ctx);
  const double fb = negated(xs[best + 1], &ctx);
  out.n = n;
  out.value = -fm;
  if (!(fm < fa && fm < fb)) return out;

  gsl_min_fminimizer* s = gsl_min_fminimizer_alloc(gsl_min_fminimizer_goldensection);
  if (gsl_min_fminimizer_set_with_values(s, &fn, m0, fm, xs[best - 1], fa, xs[best + 1], fb) == GSL_SUCCESS) {
    for (int it = 0; it < 200; ++it) {
      if (gsl_min_fminimizer_iterate(s) != GSL_SUCCESS) break;
      const double a = gsl_min_fminimizer_x_lower(s), b = gsl_min_fminimizer_x_upper(s);
      if (gsl_min_test_interval(a, b, o.rel_tol, 0.0) == GSL_SUCCESS) break;
    }
    const double xm = gsl_min_fminimizer_x_minimum(s);
    const double vm = -gsl_min_fminimizer_f_minimum(s);
    if (vm >= out.value) {
      out.lambda_opt = std::exp(xm);
      out.value = vm;
    }
  }
  gsl_min_fminimizer_free(s);
  return out;
}

OptimizedPoint optimize_lambda(double kappa, const MismatchConfig& mismatch, Objective objective,
                               const TwoQubitState& input, DistillationMode mode, const DetectorModel& detector,
                               const LambdaSearchOptions& options) {
  if (!(kappa > 1.0)) throw DomainError("optimize: kappa must exceed 1");
  GcPoint p{kappa, 0.0, mismatch, mode, input, detector, 0};
  auto f = [&](double lam, int n) {
    GcPoint q = p;
    q.lambda = lam;
    q.n = n;
    const PointEvaluation ev = evaluate_gc_point(q);
    return objective == Objective::success ? ev.metrics.ps_per_qubit : ev.metrics.fidelity;
  };
  OptimizedPoint out;
  out.optimum = maximize_over_lambda(f, kappa, options);
  p.lambda = out.optimum.lambda_opt;
  p.n = out.optimum.n;
  out.evaluation = evaluate_gc_point(p);
  return out;
}

LambdaOptimum optimize_raw_unheralded_fidelity(double kappa, const MismatchConfig& mismatch,
                                               const TwoQubitState& input, const LambdaSearchOptions& options) {
  auto f = [&](double lam, int n) {
    return unheralded_fidelity(raw_cz_table(ChainConfig{n, lam, kappa}, mismatch), input);
  };
  return maximize_over_lambda(f, kappa, options);
}

GammaProbe probe_gamma(double kappa, double gamma, const ThresholdCurve& curve, const TwoQubitState& input,
                       const BoundOptions& options) {
  GammaProbe g;
  try {
    const OptimizedPoint op = optimize_lambda(kappa, MismatchConfig{gamma}, Objective::success, input,
                                              options.mode, options.detector, options.lambda);
    g.lambda_opt = op.optimum.lambda_opt;
    g.rates = op.evaluation.rates;
    g.tolerable = is_tolerable(g.rates, curve);
  } catch (const InfeasibleError&) {
    g.tolerable = false;
    g.rates = {1.0, 1.0};
  }
  return g;
}

BoundResult gamma_min_for_kappa(double kappa, const ThresholdCurve& curve, const TwoQubitState& input,
                                const BoundOptions& options) {
  if (curve.empty()) throw ConfigError("bounds: empty threshold curve");
  BoundResult r;
  r.kappa = kappa;
  GammaProbe top = probe_gamma(kappa, 1.0, curve, input, options);
  r.lambda_opt = top.lambda_opt;
  r.rates_at_bound = top.rates;
  if (!top.tolerable) {
    r.feasible = false;
    r.gamma_min = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  r.feasible = true;
  const GammaProbe bottom = probe_gamma(kappa, 0.0, curve, input, options);
  if (bottom.tolerable) {
    r.gamma_min = 0.0;
    r.lambda_opt = bottom.lambda_opt;
    r.rates_at_bound = bottom.rates;
    return r;
  }
  double lo = 0.0, hi = 1.0;
  GammaProbe at_hi = top;
  while (hi - lo > options.gamma_tol) {
    const double mid = 0.5 * (lo + hi);
    const GammaProbe pm = probe_gamma(kappa, mid, curve, input, options);
    if (pm.tolerable) {
      hi = mid;
      at_hi = pm;
    } else {
      lo = mid;
    }
  }
  r.gamma_min = hi;
  r.lambda_opt = at_hi.lambda_opt;
  r.rates_at_bound = at_hi.rates;
  return r;
}

GammaProbe probe_kappa(double kappa, const ThresholdCurve& curve, DistillationMode mode,
                       const KappaSearchOptions& options) {
  if (mode == DistillationMode::full) {
    BoundOptions bo;
    bo.mode = mode;
    bo.detector = options.detector;
    bo.lambda = options.lambda;
    return probe_gamma(kappa, 1.0, curve, TwoQubitState::equal_superposition(), bo);
  }
  GcPoint p{kappa, 0.0, MismatchConfig{1.0}, DistillationMode::none, TwoQubitState::minus_one_one(),
            options.detector, 0};
  auto margin = [&](double lam, int n) {
    GcPoint q = p;
    q.lambda = lam;
    q.n = n;
    return tolerance_margin(evaluate_gc_point(q).rates, curve);
  };
  GammaProbe g;
  const LambdaOptimum opt = maximize_over_lambda(margin, kappa, options.lambda);
  p.lambda = opt.lambda_opt;
  p.n = opt.n;
  g.lambda_opt = opt.lambda_opt;
  g.rates = evaluate_gc_point(p).rates;
  g.tolerable = is_tolerable(g.rates, curve);
  return g;
}

KappaBound kappa_min_at_perfect_matching(const ThresholdCurve& curve, DistillationMode mode,
                                         const KappaSearchOptions& options) {
  if (curve.empty()) throw ConfigError("bounds: empty threshold curve");
  KappaBound b;
  GammaProbe low = probe_kappa(options.kappa_lo, curve, mode, options);
  if (low.tolerable) {
    b.feasible = true;
    b.kappa_min = options.kappa_lo;
    b.lambda_opt = low.lambda_opt;
    b.rates = low.rates;
    return b;
  }
  GammaProbe high = probe_kappa(options.kappa_hi, curve, mode, options);
  if (!high.tolerable) {
    b.feasible = false;
    b.kappa_min = std::numeric_limits<double>::quiet_NaN();
    b.lambda_opt = high.lambda_opt;
    b.rates = high.rates;
    return b;
  }
  double lo = std::log(options.kappa_lo), hi = std::log(options.kappa_hi);
  const double tol = std::log1p(options.rel_tol);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const GammaProbe pm = probe_kappa(std::exp(mid), curve, mode, options);
    if (pm.tolerable) {
      hi = mid;
      high = pm;
    } else {
      lo = mid;
    }
  }
  b.feasible = true;
  b.kappa_min = std::exp(hi);
  b.lambda_opt = high.lambda_opt;
  b.rates = high.rates;
  return b;
}

DistillationAdvantage distillation_advantage_report(const ThresholdCurve& curve, const KappaSearchOptions& options) {
  DistillationAdvantage r;
  r.label = curve.label();
  r.full = kappa_min_at_perfect_matching(curve, DistillationMode::full, options);
  r.none = kappa_min_at_perfect_matching(curve, DistillationMode::none, options);
  const double inf = std::numeric_limits<double>::infinity();
  const double kf = r.full.feasible ? r.full.kappa_min : inf;
  const double kn = r.none.feasible ? r.none.kappa_min : inf;
  r.vacuous = r.full.feasible && r.none.feasible && kf <= options.kappa_lo && kn <= options.kappa_lo;
  r.advantage = kf < kn;
  return r;
}

ThresholdCurve calibrate_threshold_curve(const CalibrationTargets& t) {
  const OptimizedPoint g = optimize_lambda(t.kappa_gamma, MismatchConfig{t.gamma_target}, Objective::success,
                                           TwoQubitState::equal_superposition());
  const double Lg = g.evaluation.rates.located, Ug = g.evaluation.rates.unlocated;

  const OptimizedPoint f = optimize_lambda(t.kappa_full, MismatchConfig{1.0}, Objective::success,
                                           TwoQubitState::equal_superposition());
  const double Lend = f.evaluation.rates.located;

  std::vector<CurvePoint> frontier;
  const double lo = std::log(1.0), hi = std::log(default_lambda_max(t.kappa_nodist));
  for (int i = 0; i < t.frontier_points; ++i) {
    GcPoint p{t.kappa_nodist, std::exp(lo + (hi - lo) * i / (t.frontier_points - 1)), MismatchConfig{1.0},
              DistillationMode::none, TwoQubitState::minus_one_one(), {}, 0};
    const ErrorRates r = evaluate_gc_point(p).rates;
    frontier.push_back({r.located, r.unlocated});
  }
  std::sort(frontier.begin(), frontier.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return a.located < b.located || (a.located == b.located && a.unlocated < b.unlocated);
  });

  std::vector<CurvePoint> pts;
  pts.push_back({0.0, Ug});
  if (Lg > 0.0) pts.push_back({Lg, Ug});
  double best_u = Ug;
  for (const auto& c : frontier) {
    if (c.located <= Lg || c.located >= Lend) continue;
    if (c.unlocated >= best_u || c.located <= pts.back().located) continue;
    pts.push_back(c);
    best_u = c.unlocated;
  }
  pts.push_back({Lend, 0.0});
  return ThresholdCurve(t.label, std::move(pts));
}

}  // namespace zeno
