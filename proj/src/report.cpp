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

#include "zeno/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "zeno/errors.hpp"
#include "zeno/fock.hpp"
#include "zeno/tau.hpp"

#ifndef ZENO_VERSION
#define ZENO_VERSION "0.0.0"
#endif

namespace zeno {

const char* version() { return ZENO_VERSION; }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Objective parse_objective(const std::string& text) {
  if (text == "success") return Objective::success;
  if (text == "fidelity") return Objective::fidelity;
  throw ConfigError("objective must be 'success' or 'fidelity', got '" + text + "'");
}

const char* to_string(Objective o) { return o == Objective::success ? "success" : "fidelity"; }

DetectorModel PointSpec::detector() const {
  DetectorModel d;
  d.eta = eta;
  d.relative_noise = relative_noise;
  return d;
}

void PointSpec::validate() const {
  if (!(kappa > 1.0) || !std::isfinite(kappa)) throw ConfigError("kappa: must be finite and greater than 1");
  if (lambda && (!(*lambda >= 0.0) || !std::isfinite(*lambda)))
    throw ConfigError("lambda: must be finite and nonnegative");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ConfigError("gamma: must lie in [0, 1]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw ConfigError("eta: must lie in [0, 1]");
  if (n < 0 || n == 1) throw ConfigError("n: must be 0 (continuum) or at least 2");
  if (worst_samples < 1) throw ConfigError("worst-samples: must be positive");
  if (input != "worst-f" && input != "worst-p") TwoQubitState::parse(input);
}

nlohmann::json PointSpec::to_json() const {
  nlohmann::json j;
  j["kappa"] = kappa;
  j["lambda"] = lambda ? nlohmann::json(*lambda) : nlohmann::json("optimize");
  j["gamma"] = gamma;
  j["eta"] = eta;
  j["relative_noise"] = relative_noise;
  j["n"] = n == 0 ? nlohmann::json("continuum") : nlohmann::json(n);
  j["distill"] = to_string(distill);
  j["objective"] = to_string(objective);
  j["input"] = input;
  j["seed"] = seed;
  j["worst_samples"] = worst_samples;
  return j;
}

namespace {

nlohmann::json metrics_json(const GateMetrics& m) {
  return {{"fidelity", m.fidelity},
          {"ps_per_qubit", m.ps_per_qubit},
          {"ps_two_qubit", m.ps_two_qubit},
          {"fidelity_branch_average", m.fidelity_branch_average},
          {"ps_two_qubit_branch_total", m.ps_two_qubit_branch_total}};
}

nlohmann::json state_json(const TwoQubitState& s) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& z : s.amp) a.push_back({z.real(), z.imag()});
  return a;
}

GcPoint gc_point(const PointSpec& spec, double lambda, const TwoQubitState& input, int n) {
  return GcPoint{spec.kappa, lambda, MismatchConfig{spec.gamma}, spec.distill, input, spec.detector(), n};
}

}  // namespace

ResolvedPoint resolve_point(const PointSpec& spec) {
  spec.validate();
  const bool worst_f = spec.input == "worst-f";
  const bool worst_p = spec.input == "worst-p";
  TwoQubitState base = worst_f ? TwoQubitState::equal_superposition()
                       : worst_p ? TwoQubitState::one_one()
                                 : TwoQubitState::parse(spec.input);
  LambdaSearchOptions lopt;
  lopt.n = spec.n;
  ResolvedPoint r;
  int n = spec.n;
  if (spec.lambda) {
    r.lambda = *spec.lambda;
  } else {
    const OptimizedPoint op = optimize_lambda(spec.kappa, MismatchConfig{spec.gamma}, spec.objective, base,
                                              spec.distill, spec.detector(), lopt);
    r.lambda = op.optimum.lambda_opt;
    n = op.optimum.n;
  }
  if (n == 0) n = continuum_n(r.lambda);
  if (worst_f || worst_p) {
    WorstCaseOptions wo;
    wo.samples = spec.worst_samples;
    wo.seed = spec.seed;
    base = worst_case_search(worst_f ? WorstCaseMetric::fidelity : WorstCaseMetric::success,
                             ChainConfig{n, r.lambda, spec.kappa}, MismatchConfig{spec.gamma}, spec.distill, wo)
               .state;
  }
  r.input = base;
  r.evaluation = evaluate_gc_point(gc_point(spec, r.lambda, base, n));
  return r;
}

nlohmann::json evaluate_point(const PointSpec& spec) {
  const ResolvedPoint rp = resolve_point(spec);
  const PointEvaluation& ev = rp.evaluation;
  const MismatchConfig mm{spec.gamma};
  nlohmann::json j;
  j["version"] = version();
  j["config"] = spec.to_json();
  j["n"] = ev.n;
  j["lambda"] = rp.lambda;
  j["tau"] = ev.tau;
  j["tau_imag_residue"] = evaluate_tau(ev.n, rp.lambda).imag_residue;
  if (ev.n <= (1 << 20)) {
    const double chain = chain_tau(ev.n, rp.lambda);
    j["tau_chain"] = chain;
    j["tau_chain_residual"] = std::abs(chain - ev.tau);
  }
  j["input"] = state_json(rp.input);
  const GateTable table = gc_gate_table(ev.tau, rp.lambda, spec.kappa, mm, spec.distill);
  j["gate_table"] = to_json(table);
  j["gate_unheralded_fidelity"] = unheralded_fidelity(table, rp.input);
  j["gate_heralded_fidelity"] = heralded_fidelity(table, rp.input);
  j["metrics"] = metrics_json(ev.metrics);
  if (spec.distill == DistillationMode::full) {
    const GateMetrics cf = closed_form_metrics(rp.input, ev.tau, rp.lambda, spec.kappa, mm, spec.detector());
    j["closed_form"] = metrics_json(cf);
    j["closed_form_residual"] = {{"fidelity", std::abs(cf.fidelity - ev.metrics.fidelity)},
                                 {"ps_per_qubit", std::abs(cf.ps_per_qubit - ev.metrics.ps_per_qubit)}};
  }
  j["error_rates"] = {{"unlocated", ev.rates.unlocated}, {"located", ev.rates.located}};
  return j;
}

SweepVariable parse_sweep_variable(const std::string& text) {
  if (text == "kappa") return SweepVariable::kappa;
  if (text == "lambda") return SweepVariable::lambda;
  if (text == "gamma_overlap" || text == "gamma") return SweepVariable::gamma_overlap;
  throw ConfigError("sweep variable must be kappa, lambda or gamma_overlap, got '" + text + "'");
}

const char* to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::kappa: return "kappa";
    case SweepVariable::lambda: return "lambda";
    case SweepVariable::gamma_overlap: return "gamma_overlap";
  }
  return "?";
}

void SweepSpec::validate() const {
  if (points < 2) throw ConfigError("sweep points: must be at least 2");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw ConfigError("sweep range: must be finite");
  if (log_spacing && !(start > 0.0 && stop > 0.0)) throw ConfigError("sweep range: log spacing needs a positive range");
  if (jobs < 1) throw ConfigError("jobs: must be positive");
  PointSpec probe = fixed;
  for (double v : {start, stop}) {
    switch (variable) {
      case SweepVariable::kappa: probe.kappa = v; break;
      case SweepVariable::lambda: probe.lambda = v; break;
      case SweepVariable::gamma_overlap: probe.gamma = v; break;
    }
    try {
      probe.validate();
    } catch (const ConfigError& e) {
      throw ConfigError(std::string("sweep range: ") + e.what());
    }
  }
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / (points - 1);
    v[i] = log_spacing ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                       : start + t * (stop - start);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

std::string RunReport::csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << "\n";
  }
  return os.str();
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json j;
  j["version"] = version();
  j["seed"] = seed;
  j["config"] = config;
  j["columns"] = columns;
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json r = nlohmann::json::array();
    for (double x : row) r.push_back(format_double(x));
    rs.push_back(r);
  }
  j["rows"] = rs;
  j["notes"] = notes;
  return j;
}

RunReport run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::vector<double> xs = spec.values();
  RunReport rep;
  rep.seed = spec.fixed.seed;
  rep.columns = {to_string(spec.variable), "lambda_opt", "tau", "fidelity", "ps_per_qubit",
                 "ps_two_qubit", "unlocated", "located"};
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : spec.curves) {
    rep.columns.push_back("gamma_min_" + c.label());
    curves.push_back(c.label());
  }
  rep.config = {{"variable", to_string(spec.variable)},
                {"start", spec.start},
                {"stop", spec.stop},
                {"points", spec.points},
                {"spacing", spec.log_spacing ? "log" : "linear"},
                {"fixed", spec.fixed.to_json()},
                {"curves", curves}};

  const double nan = std::numeric_limits<double>::quiet_NaN();
  rep.rows.assign(xs.size(), std::vector<double>(rep.columns.size(), nan));
  std::vector<std::string> errors(xs.size());

  auto work = [&](std::size_t i) {
    PointSpec p = spec.fixed;
    switch (spec.variable) {
      case SweepVariable::kappa: p.kappa = xs[i]; break;
      case SweepVariable::lambda: p.lambda = xs[i]; break;
      case SweepVariable::gamma_overlap: p.gamma = xs[i]; break;
    }
    auto& row = rep.rows[i];
    row[0] = xs[i];
    try {
      const ResolvedPoint rp = resolve_point(p);
      const auto& m = rp.evaluation.metrics;
      row[1] = rp.lambda;
      row[2] = rp.evaluation.tau;
      row[3] = m.fidelity;
      row[4] = m.ps_per_qubit;
      row[5] = m.ps_two_qubit;
      row[6] = rp.evaluation.rates.unlocated;
      row[7] = rp.evaluation.rates.located;
      BoundOptions bo;
      bo.mode = p.distill;
      bo.detector = p.detector();
      for (std::size_t c = 0; c < spec.curves.size(); ++c) {
        const BoundResult b = gamma_min_for_kappa(p.kappa, spec.curves[c], rp.input, bo);
        row[8 + c] = b.feasible ? b.gamma_min : nan;
      }
    } catch (const DomainError& e) {
      errors[i] = e.what();
    } catch (const InfeasibleError& e) {
      errors[i] = e.what();
    }
  };

  const int jobs = std::min<int>(spec.jobs, static_cast<int>(xs.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < xs.size(); i = next++) work(i);
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& f : failures)
      if (f) std::rethrow_exception(f);
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (!errors[i].empty()) rep.notes.push_back("row " + std::to_string(i + 1) + ": " + errors[i]);
  return rep;
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    if (!s.empty() && s.back() == ',') out.emplace_back();
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (t.header.empty()) {
      t.header = split(line);
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != t.header.size())
      throw ConfigError("csv: line " + std::to_string(lineno) + ": expected " + std::to_string(t.header.size()) +
                        " fields");
    std::vector<double> row;
    for (const auto& c : cells) {
      char* end = nullptr;
      const double v = std::strtod(c.c_str(), &end);
      if (c.empty() || *end != '\0') throw ConfigError("csv: line " + std::to_string(lineno) + ": bad number '" + c + "'");
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw ConfigError("csv: missing header");
  return t;
}

}  // namespace zeno
