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

#ifndef ZENO_GC_HPP
#define ZENO_GC_HPP

#include <array>
#include <complex>
#include <cstdint>

#include "zeno/gate_table.hpp"
#include "zeno/gates.hpp"
#include "zeno/two_qubit_state.hpp"

namespace zeno {

using Mat4 = std::array<std::array<cplx, 4>, 4>;

/// Four-qubit resource state over (a, b, c, d), index 8a + 4b + 2c + d.
struct ChiState {
  std::array<cplx, 16> amp{};
};

/// ((|00> + |11>)|00> + (|01> + |10>)|11>) / 2
ChiState chi_state();

/// Heralding detector model. In the default mode every one of the
/// `detections` detectors clicks with probability eta. With
/// relative_noise set, each qubit's success probability P is instead
/// reduced to P (1 - noise_ratio (1 - P)).
struct DetectorModel {
  double eta = 1.0;
  int detections = 4;
  bool relative_noise = false;
  double noise_ratio = 0.1;

  void validate() const;
  /// Adjusted per-qubit success probability.
  double apply_per_qubit(double ps_per_qubit) const;
};

struct GateMetrics {
  /// |<ideal|out>| / |out| on the reference (all-zero) measurement branch.
  double fidelity = 0.0;
  double ps_per_qubit = 0.0;
  double ps_two_qubit = 0.0;
  /// Same quantities averaged over all 16 corrected branches.
  double fidelity_branch_average = 0.0;
  double ps_two_qubit_branch_total = 0.0;
};

/// Teleported CNOT (control: first input qubit) built from two Bell
/// measurements, each realized by the supplied diagonal gate between an
/// input qubit and a resource qubit. Input 1 is measured with resource
/// qubit d and input 2 with resource qubit a; the outputs emerge on c and b.
class GcCircuit {
 public:
  /// DomainError when the table is not diagonal, has negative failure, or
  /// violates completeness by more than 1e-9.
  explicit GcCircuit(const GateTable& gate);

  /// Pauli-corrected map of outcome branch m = 8 m1 + 4 m2 + 2 ma + md,
  /// phased so that the ideal gate gives a positive multiple of CNOT.
  const Mat4& branch_map(int m) const { return branches_[m]; }

  /// Probability that the off-line filtered resource state is produced.
  double resource_acceptance() const { return resource_acceptance_; }

  GateMetrics metrics(const TwoQubitState& input, const DetectorModel& detector = {}) const;

  /// Output of branch m before the detector model, unnormalized.
  std::array<cplx, 4> branch_output(int m, const TwoQubitState& input) const;

 private:
  std::array<Mat4, 16> branches_{};
  double resource_acceptance_ = 1.0;
};

GateMetrics simulate_gc_circuit(const GateTable& gate, const TwoQubitState& input,
                                const DetectorModel& detector = {});

/// Pauli correction applied to the outputs for branch m: indices into
/// {I, X, Z, XZ} for output qubits 1 and 2.
std::array<int, 2> feed_forward_correction(int m);

/// CNOT with control on the first qubit, index 2*q1 + q2.
Mat4 cnot_matrix();

struct ClosedFormIntermediates {
  std::array<double, 4> a{};
  std::array<cplx, 4> A{};
};

/// a1..a4 and A1..A4. With as_printed the beta and delta coefficients of A2
/// and A3 are placed literally; the default pairs them so that Gamma = 1
/// returns A proportional to the input.
ClosedFormIntermediates closed_form_intermediates(const TwoQubitState& input, double tau,
                                                  const MismatchConfig& mismatch,
                                                  bool as_printed = false);

/// Fidelity and per-qubit success probability from the closed form.
/// DomainError for tau <= 0, UndefinedFidelityError when all A vanish.
GateMetrics closed_form_metrics(const TwoQubitState& input, double tau, double lambda, double kappa,
                                const MismatchConfig& mismatch, const DetectorModel& detector = {},
                                bool as_printed = false);

enum class WorstCaseMetric { fidelity, success };

struct WorstCaseOptions {
  int samples = 10000;
  std::uint64_t seed = 1;
  /// Number of best samples handed to the local simplex refinement.
  int refine_starts = 6;
};

struct WorstCaseResult {
  TwoQubitState state;
  double value = 0.0;
};

/// Minimizes the reference-branch fidelity or per-qubit success of the
/// circuit over pure inputs. The returned state has its largest amplitude
/// real and positive.
WorstCaseResult worst_case_search(const GcCircuit& circuit, WorstCaseMetric metric,
                                  const WorstCaseOptions& options = {});

/// Worst case for the distilled (full) or raw (none) gate at one chain point.
WorstCaseResult worst_case_search(WorstCaseMetric metric, const ChainConfig& config,
                                  const MismatchConfig& mismatch, DistillationMode mode,
                                  const WorstCaseOptions& options = {});

/// Gate table fed to the circuit for the given distillation mode.
GateTable gc_gate_table(double tau, double lambda, double kappa, const MismatchConfig& mismatch,
                        DistillationMode mode);

}  // namespace zeno

#endif  // ZENO_GC_HPP
