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

#ifndef ZENO_GATES_HPP
#define ZENO_GATES_HPP

#include "zeno/fock.hpp"
#include "zeno/gate_table.hpp"
#include "zeno/two_qubit_state.hpp"

namespace zeno {

/// Wavepacket overlap Gamma of the two interacting photons.
struct MismatchConfig {
  double gamma_overlap = 1.0;

  void validate() const;
  /// sqrt(1 - Gamma^2), the weight of the tagged non-interacting component.
  double mismatch_weight() const;
};

enum class DistillationMode { full, none };

DistillationMode parse_distillation_mode(const std::string& text);
const char* to_string(DistillationMode mode);

struct DistillationConfig {
  DistillationMode mode = DistillationMode::full;

  /// tau^(1/kappa); DomainError when tau <= 0.
  static double gamma1_prime(double tau, double kappa);
};

/// Zeno CZ with partial mode matching, tau from the closed form at config.n.
GateTable raw_cz_table(const ChainConfig& config, const MismatchConfig& mismatch);
GateTable raw_cz_table(double tau, double lambda, double kappa, const MismatchConfig& mismatch);

/// Interferometric tau gate: single photons see sqrt(gamma1'), pairs
/// Gamma gamma1' tau plus a tagged sqrt(1 - Gamma^2) gamma1' component.
GateTable tau_gate_table(double tau, double kappa, const MismatchConfig& mismatch);

/// Distilled CZ in dual rail. The raw CZ acts on the two |1> rails, the tau
/// gate on the |0> rail of the first qubit and the |1> rail of the second,
/// and attenuators sqrt(gamma1^n), sqrt(gamma1'), sqrt(gamma1^n gamma1') tau
/// sit on the |0> and |1> rails of the first qubit and the |0> rail of the
/// second. Logical index is 2*x + y with y the second qubit.
GateTable distilled_cz_table(const ChainConfig& config, const MismatchConfig& mismatch);
GateTable distilled_cz_table(double tau, double lambda, double kappa, const MismatchConfig& mismatch);

/// Heralded success probability of the distilled CZ at perfect matching,
/// exp(-2 lambda / kappa) tau^(2 + 2/kappa).
double distilled_success_probability(double tau, double lambda, double kappa);

/// Table applied to a state: logical and mismatch-tagged output vectors.
struct GateOutput {
  std::array<cplx, 4> logical{};
  std::array<cplx, 4> mismatch{};
  double failure = 0.0;
  double logical_norm2() const;
  double mismatch_norm2() const;
};

GateOutput apply_gate(const GateTable& table, const TwoQubitState& input);

/// |<CZ psi|logical out>|^2 divided by the total output mass including
/// failure. DomainError for unnormalized input; UndefinedFidelityError when
/// nothing is retained.
double unheralded_fidelity(const GateTable& table, const TwoQubitState& input);

/// |<CZ psi|logical out>|^2 / (|logical|^2 + |mismatch|^2): fidelity given a
/// success herald, with tagged photons indistinguishable at the detectors.
double heralded_fidelity(const GateTable& table, const TwoQubitState& input);

/// |logical|^2 + |mismatch|^2 for the given input.
double heralded_probability(const GateTable& table, const TwoQubitState& input);

}  // namespace zeno

#endif  // ZENO_GATES_HPP
