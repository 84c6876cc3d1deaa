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

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeno/analysis.hpp"
#include "zeno/errors.hpp"
#include "zeno/fock.hpp"
#include "zeno/report.hpp"
#include "zeno/tau.hpp"
#include "zeno/threshold.hpp"

namespace {

using nlohmann::json;

struct Options {
  double kappa = 1e4;
  std::optional<double> lambda;
  bool optimize_lambda = false;
  double gamma = 1.0;
  double eta = 1.0;
  bool relative_noise = false;
  int n = 0;
  std::string distill = "full";
  std::string input = "equal";
  std::string objective = "success";
  std::vector<std::string> curves;
  std::string out;
  std::uint64_t seed = 1;
  int jobs = 1;
  int worst_samples = 10000;

  std::string var = "kappa";
  double start = 1e2;
  double stop = 1e8;
  int points = 25;
  std::string spacing = "log";

  std::string what = "all";
};

zeno::PointSpec point_spec(const Options& o) {
  zeno::PointSpec p;
  p.kappa = o.kappa;
  if (!o.optimize_lambda) p.lambda = o.lambda;
  p.gamma = o.gamma;
  p.eta = o.eta;
  p.relative_noise = o.relative_noise;
  p.n = o.n;
  p.distill = zeno::parse_distillation_mode(o.distill);
  p.objective = zeno::parse_objective(o.objective);
  p.input = o.input;
  p.seed = o.seed;
  p.worst_samples = o.worst_samples;
  p.validate();
  return p;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw zeno::ConfigError("out: cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw zeno::ConfigError("out: failed writing '" + path + "'");
}

void emit(const Options& o, const json& j) { write_text(o.out, j.dump(2) + "\n"); }

int cmd_tau(const Options& o) {
  if (!o.lambda) throw zeno::ConfigError("tau: --lambda is required");
  const double lam = *o.lambda;
  const int n = o.n > 0 ? o.n : zeno::continuum_n(lam);
  const zeno::TauEvaluation ev = zeno::evaluate_tau(n, lam);
  const zeno::TauClosedFormIntermediates ci = zeno::tau_intermediates(n, std::exp(-lam / n));
  json j{{"version", zeno::version()},
         {"n", n},
         {"lambda", lam},
         {"tau", zeno::tau_closed_form(n, lam)},
         {"imag_residue", ev.imag_residue},
         {"oscillatory", ev.oscillatory},
         {"d", {ci.d.real(), ci.d.imag()}},
         {"g", ci.g.real()},
         {"h", ci.h.real()}};
  if (n <= (1 << 20)) {
    const double c = zeno::chain_tau(n, lam);
    j["tau_chain"] = c;
    j["chain_residual"] = std::abs(c - ev.value);
  }
  emit(o, j);
  return 0;
}

int cmd_chain_verify(const Options& o) {
  std::vector<int> ns;
  if (o.n > 0) {
    ns.push_back(o.n);
  } else {
    for (int n = 2; n <= 64; ++n) ns.push_back(n);
  }
  std::vector<double> lams = o.lambda ? std::vector<double>{*o.lambda}
                                      : std::vector<double>{0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
  double worst_tau = 0.0, worst_table = 0.0, worst_norm = 0.0;
  json cases = json::array();
  for (int n : ns) {
    for (double lam : lams) {
      const double cf = zeno::tau_closed_form(n, lam);
      const double ch = zeno::chain_tau(n, lam);
      const zeno::ChainConfig cfg{n, lam, o.kappa};
      const zeno::GateTable t = zeno::run_zeno_chain(cfg);
      const double g = cfg.gamma1_total();
      const double expect[4] = {1.0, std::sqrt(g), std::sqrt(g), -g * cf};
      double dev = 0.0;
      for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(t.columns[i].logical[i] - expect[i]));
      worst_tau = std::max(worst_tau, std::abs(cf - ch));
      worst_table = std::max(worst_table, dev);
      worst_norm = std::max(worst_norm, t.completeness_error());
      cases.push_back({{"n", n}, {"lambda", lam}, {"tau_closed_form", cf}, {"tau_chain", ch}});
    }
  }
  const bool ok = worst_tau <= 1e-9 && worst_table <= 1e-10 && worst_norm <= 1e-12;
  emit(o, {{"version", zeno::version()},
           {"kappa", o.kappa},
           {"max_tau_residual", worst_tau},
           {"max_table_residual", worst_table},
           {"max_norm_error", worst_norm},
           {"pass", ok},
           {"cases", cases}});
  return ok ? 0 : 2;
}

int cmd_gate(const Options& o) {
  const zeno::PointSpec p = point_spec(o);
  if (!p.lambda) throw zeno::ConfigError("gate: --lambda is required");
  const int n = p.n > 0 ? p.n : zeno::continuum_n(*p.lambda);
  const double tau = zeno::tau_closed_form(n, *p.lambda);
  const zeno::MismatchConfig mm{p.gamma};
  const zeno::GateTable t = zeno::gc_gate_table(tau, *p.lambda, p.kappa, mm, p.distill);
  const zeno::TwoQubitState in = zeno::TwoQubitState::parse(p.input);
  emit(o, {{"version", zeno::version()},
           {"config", p.to_json()},
           {"n", n},
           {"tau", tau},
           {"table", zeno::to_json(t)},
           {"completeness_error", t.completeness_error()},
           {"unheralded_fidelity", zeno::unheralded_fidelity(t, in)},
           {"heralded_fidelity", zeno::heralded_fidelity(t, in)},
           {"heralded_probability", zeno::heralded_probability(t, in)}});
  return 0;
}

int cmd_gc(const Options& o) {
  emit(o, zeno::evaluate_point(point_spec(o)));
  return 0;
}

int cmd_optimize(const Options& o) {
  zeno::PointSpec p = point_spec(o);
  p.lambda.reset();
  json j = zeno::evaluate_point(p);
  if (p.distill == zeno::DistillationMode::none || p.objective == zeno::Objective::fidelity) {
    const zeno::LambdaOptimum raw = zeno::optimize_raw_unheralded_fidelity(
        p.kappa, zeno::MismatchConfig{p.gamma}, zeno::TwoQubitState::equal_superposition());
    j["raw_gate_unheralded_fidelity_optimum"] = {{"lambda", raw.lambda_opt}, {"fidelity", raw.value}};
  }
  emit(o, j);
  return 0;
}

std::vector<zeno::ThresholdCurve> load_curves(const Options& o) {
  std::vector<zeno::ThresholdCurve> cs;
  for (const auto& path : o.curves) cs.push_back(zeno::load_threshold_curve(path));
  return cs;
}

int cmd_sweep(const Options& o) {
  zeno::SweepSpec s;
  s.variable = zeno::parse_sweep_variable(o.var);
  s.start = o.start;
  s.stop = o.stop;
  s.points = o.points;
  if (o.spacing != "log" && o.spacing != "linear") throw zeno::ConfigError("spacing: must be log or linear");
  s.log_spacing = o.spacing == "log";
  s.fixed = point_spec(o);
  s.curves = load_curves(o);
  s.jobs = o.jobs;
  const zeno::RunReport rep = zeno::run_sweep(s);
  write_text(o.out, rep.csv());
  if (!o.out.empty() && o.out != "-") write_text(o.out + ".json", rep.to_json().dump(2) + "\n");
  for (const auto& note : rep.notes) std::cerr << "note: " << note << "\n";
  return 0;
}

json kappa_json(const zeno::KappaBound& b) {
  return {{"feasible", b.feasible},
          {"kappa_min", b.feasible ? json(b.kappa_min) : json(nullptr)},
          {"lambda_opt", b.lambda_opt},
          {"unlocated", b.rates.unlocated},
          {"located", b.rates.located}};
}

int cmd_bounds(const Options& o) {
  const auto curves = load_curves(o);
  if (curves.empty()) throw zeno::ConfigError("bounds: at least one --curve is required");
  if (o.what != "all" && o.what != "gamma" && o.what != "kappa")
    throw zeno::ConfigError("what: must be all, gamma or kappa");
  const zeno::PointSpec p = point_spec(o);
  zeno::BoundOptions bo;
  bo.mode = p.distill;
  bo.detector = p.detector();
  zeno::KappaSearchOptions ko;
  ko.detector = p.detector();
  json out{{"version", zeno::version()}, {"config", p.to_json()}};
  json rs = json::array();
  for (const auto& c : curves) {
    json r{{"curve", c.label()}};
    if (o.what != "kappa") {
      zeno::TwoQubitState in = zeno::TwoQubitState::equal_superposition();
      if (o.input == "worst-p") in = zeno::TwoQubitState::one_one();
      else if (o.input != "worst-f") in = zeno::TwoQubitState::parse(o.input);
      const zeno::BoundResult b = zeno::gamma_min_for_kappa(p.kappa, c, in, bo);
      r["gamma_bound"] = {{"kappa", b.kappa},
                          {"feasible", b.feasible},
                          {"gamma_min", b.feasible ? json(b.gamma_min) : json(nullptr)},
                          {"lambda_opt", b.lambda_opt},
                          {"unlocated", b.rates_at_bound.unlocated},
                          {"located", b.rates_at_bound.located}};
    }
    if (o.what != "gamma") {
      const zeno::DistillationAdvantage a = zeno::distillation_advantage_report(c, ko);
      r["kappa_min_full"] = kappa_json(a.full);
      r["kappa_min_none"] = kappa_json(a.none);
      r["distillation_advantage"] = a.advantage;
      r["vacuous"] = a.vacuous;
    }
    rs.push_back(r);
  }
  out["results"] = rs;
  emit(o, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeno CZ / teleported CNOT simulator and fault-tolerance bound tool", "zeno"};
  app.set_version_flag("--version", std::string(zeno::version()));
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.require_subcommand(1);

  Options o;
  double lambda_value = 0.0;
  auto* lam = app.add_option("--lambda", lambda_value, "total absorption strength")->check(CLI::NonNegativeNumber);
  auto* optl = app.add_flag("--optimize-lambda", o.optimize_lambda, "optimize lambda for --objective");
  lam->excludes(optl);
  app.add_option("--kappa", o.kappa, "one- to two-photon transmission ratio")->capture_default_str();
  app.add_option("--gamma", o.gamma, "wavepacket overlap")->capture_default_str();
  app.add_option("--eta", o.eta, "detector efficiency")->capture_default_str();
  app.add_flag("--relative-noise", o.relative_noise, "measurement noise at one tenth of the gate noise");
  app.add_option("--n", o.n, "chain segments (0: continuum)")->capture_default_str();
  app.add_option("--distill", o.distill, "full | none")->capture_default_str();
  app.add_option("--input", o.input, "equal | one-one | minus-one-one | worst-f | worst-p | a,b,c,d")
      ->capture_default_str();
  app.add_option("--objective", o.objective, "success | fidelity")->capture_default_str();
  app.add_option("--curve", o.curves, "threshold curve file (repeatable)");
  app.add_option("--out", o.out, "output path (default stdout)");
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--jobs", o.jobs, "parallel sweep workers")->capture_default_str();
  app.add_option("--worst-samples", o.worst_samples, "random inputs in worst-case searches")->capture_default_str();

  auto* tau = app.add_subcommand("tau", "closed-form tau with chain cross-check");
  auto* verify = app.add_subcommand("chain-verify", "closed form against the chain simulation on a grid");
  auto* gate = app.add_subcommand("gate", "gate table at one point");
  auto* gc = app.add_subcommand("gc", "teleported CNOT metrics at one point");
  auto* opt = app.add_subcommand("optimize", "optimal lambda and metrics");
  auto* sweep = app.add_subcommand("sweep", "CSV sweep over kappa, lambda or gamma_overlap");
  sweep->add_option("--var", o.var, "kappa | lambda | gamma_overlap")->capture_default_str();
  sweep->add_option("--start", o.start)->capture_default_str();
  sweep->add_option("--stop", o.stop)->capture_default_str();
  sweep->add_option("--points", o.points)->capture_default_str();
  sweep->add_option("--spacing", o.spacing, "log | linear")->capture_default_str();
  auto* bounds = app.add_subcommand("bounds", "Gamma and kappa lower bounds against threshold curves");
  bounds->add_option("--what", o.what, "all | gamma | kappa")->capture_default_str();
  for (auto* sc : {tau, verify, gate, gc, opt, sweep, bounds}) sc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (lam->count() > 0) o.lambda = lambda_value;

  try {
    if (*tau) return cmd_tau(o);
    if (*verify) return cmd_chain_verify(o);
    if (*gate) return cmd_gate(o);
    if (*gc) return cmd_gc(o);
    if (*opt) return cmd_optimize(o);
    if (*sweep) return cmd_sweep(o);
    if (*bounds) return cmd_bounds(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 1;
}
