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

#include "zeno/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zeno/errors.hpp"
#include "zeno/tau.hpp"

namespace zeno {

void MismatchConfig::validate() const {
  if (!(gamma_overlap >= 0.0 && gamma_overlap <= 1.0))
    throw DomainError("mismatch: Gamma must lie in [0, 1]");
}

double MismatchConfig::mismatch_weight() const {
  return std::sqrt(std::max(0.0, (1.0 - gamma_overlap) * (1.0 + gamma_overlap)));
}

DistillationMode parse_distillation_mode(const std::string& text) {
  if (text == "full") return DistillationMode::full;
  if (text == "none") return DistillationMode::none;
  throw ConfigError("distillation mode must be 'full' or 'none', got '" + text + "'");
}

const char* to_string(DistillationMode mode) { return mode == DistillationMode::full ? "full" : "none"; }

double DistillationConfig::gamma1_prime(double tau, double kappa) {
  if (!(tau > 0.0))
    throw DomainError("distillation: tau = " + std::to_string(tau) +
                      " <= 0, the tau-gate transmission tau^(1/kappa) is undefined");
  return std::pow(tau, 1.0 / kappa);
}

namespace {

void close_columns(GateTable& t) {
  for (auto& col : t.columns) col.failure = std::max(0.0, 1.0 - col.retained_mass());
}

// A single-rail two-photon table for a pair gate: paired photons carry
// `pair` on the logical output and `tagged` on the mismatch output.
GateTable pair_gate(double single, cplx pair, double tagged) {
  GateTable t;
  t.columns[0].logical[0] = 1.0;
  t.columns[1].logical[1] = single;
  t.columns[2].logical[2] = single;
  t.columns[3].logical[3] = pair;
  t.columns[3].mismatch[3] = tagged;
  close_columns(t);
  return t;
}

}  // namespace

GateTable raw_cz_table(double tau, double lambda, double kappa, const MismatchConfig& mismatch) {
  mismatch.validate();
  const double g = std::exp(-lambda / kappa);
  GateTable t = pair_gate(std::sqrt(g), -mismatch.gamma_overlap * g * tau, mismatch.mismatch_weight() * g);
  t.label = "raw-cz";
  return t;
}

GateTable raw_cz_table(const ChainConfig& config, const MismatchConfig& mismatch) {
  config.validate();
  return raw_cz_table(tau_closed_form(config.n, config.lambda), config.lambda, config.kappa, mismatch);
}

GateTable tau_gate_table(double tau, double kappa, const MismatchConfig& mismatch) {
  mismatch.validate();
  const double gp = DistillationConfig::gamma1_prime(tau, kappa);
  GateTable t = pair_gate(std::sqrt(gp), mismatch.gamma_overlap * gp * tau, mismatch.mismatch_weight() * gp);
  t.label = "tau-gate";
  return t;
}

GateTable distilled_cz_table(double tau, double lambda, double kappa, const MismatchConfig& mismatch) {
  const GateTable cz = raw_cz_table(tau, lambda, kappa, mismatch);
  const GateTable tg = tau_gate_table(tau, kappa, mismatch);
  const double g = std::exp(-lambda / kappa);
  const double gp = DistillationConfig::gamma1_prime(tau, kappa);

  const double f0 = std::sqrt(g);
  const double f1 = std::sqrt(gp);
  const double h0 = std::sqrt(g * gp) * tau;
  const double h1 = 1.0;

  GateTable t;
  t.label = "distilled-cz";
  t.distillation_transmissions = {f0, f1, h0};
  t.ancilla_filter = {h0, h1};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int i = logical_index(x, y);
      const int j = logical_index(1 - x, y);
      const cplx a = cz.columns[i].logical[i], b = cz.columns[i].mismatch[i];
      const cplx c = tg.columns[j].logical[j], d = tg.columns[j].mismatch[j];
      const double filt = (x ? f1 : f0) * (y ? h1 : h0);
      t.columns[i].logical[i] = filt * a * c;
      t.columns[i].mismatch[i] = filt * (a * d + b * c + b * d);
    }
  }
  close_columns(t);
  return t;
}

GateTable distilled_cz_table(const ChainConfig& config, const MismatchConfig& mismatch) {
  config.validate();
  return distilled_cz_table(tau_closed_form(config.n, config.lambda), config.lambda, config.kappa, mismatch);
}

double distilled_success_probability(double tau, double lambda, double kappa) {
  if (!(tau > 0.0)) throw DomainError("distillation: tau <= 0");
  return std::exp(-2.0 * lambda / kappa) * std::pow(tau, 2.0 + 2.0 / kappa);
}

double GateOutput::logical_norm2() const {
  double acc = 0.0;
  for (const auto& z : logical) acc += std::norm(z);
  return acc;
}

double GateOutput::mismatch_norm2() const {
  double acc = 0.0;
  for (const auto& z : mismatch) acc += std::norm(z);
  return acc;
}

GateOutput apply_gate(const GateTable& table, const TwoQubitState& input) {
  GateOutput out;
  for (int i = 0; i < 4; ++i) {
    const GateColumn& col = table.columns[i];
    for (int k = 0; k < 4; ++k) {
      out.logical[k] += col.logical[k] * input.amp[i];
      out.mismatch[k] += col.mismatch[k] * input.amp[i];
    }
    out.failure += std::norm(input.amp[i]) * col.failure;
  }
  return out;
}

namespace {

double cz_overlap2(const GateOutput& out, const TwoQubitState& input) {
  cplx ip = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double sign = (k == 3) ? -1.0 : 1.0;
    ip += std::conj(sign * input.amp[k]) * out.logical[k];
  }
  return std::norm(ip);
}

}  // namespace

double unheralded_fidelity(const GateTable& table, const TwoQubitState& input) {
  input.require_normalized();
  const GateOutput out = apply_gate(table, input);
  const double kept = out.logical_norm2() + out.mismatch_norm2();
  if (!(kept > 0.0)) throw UndefinedFidelityError("fidelity: gate output has zero norm");
  return cz_overlap2(out, input) / (kept + out.failure);
}

double heralded_fidelity(const GateTable& table, const TwoQubitState& input) {
  input.require_normalized();
  const GateOutput out = apply_gate(table, input);
  const double kept = out.logical_norm2() + out.mismatch_norm2();
  if (!(kept > 0.0)) throw UndefinedFidelityError("fidelity: gate output has zero norm");
  return cz_overlap2(out, input) / kept;
}

double heralded_probability(const GateTable& table, const TwoQubitState& input) {
  input.require_normalized();
  const GateOutput out = apply_gate(table, input);
  return out.logical_norm2() + out.mismatch_norm2();
}

}  // namespace zeno
