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

#include "zeno/gc.hpp"

#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gsl_quiet.hpp"
#include "zeno/errors.hpp"
#include "zeno/tau.hpp"

namespace zeno {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

using Vec64 = std::array<cplx, 64>;

// Six-qubit register: input 1, input 2, then resource a, b, c, d.
enum Qubit : int { kIn1 = 0, kIn2 = 1, kA = 2, kB = 3, kC = 4, kD = 5 };

constexpr int bit(int index, int qubit) { return (index >> (5 - qubit)) & 1; }

void hadamard(Vec64& v, int qubit) {
  const int mask = 1 << (5 - qubit);
  for (int i = 0; i < 64; ++i) {
    if (i & mask) continue;
    const cplx x = v[i], y = v[i | mask];
    v[i] = kInvSqrt2 * (x + y);
    v[i | mask] = kInvSqrt2 * (x - y);
  }
}

using Pauli = std::array<std::array<cplx, 2>, 2>;

const std::array<Pauli, 4>& paulis() {
  static const std::array<Pauli, 4> p = {{
      {{{1.0, 0.0}, {0.0, 1.0}}},
      {{{0.0, 1.0}, {1.0, 0.0}}},
      {{{1.0, 0.0}, {0.0, -1.0}}},
      {{{0.0, -1.0}, {1.0, 0.0}}},  // X Z
  }};
  return p;
}

Mat4 kron(const Pauli& p, const Pauli& q) {
  Mat4 m{};
  for (int i1 = 0; i1 < 2; ++i1)
    for (int i2 = 0; i2 < 2; ++i2)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int j2 = 0; j2 < 2; ++j2) m[2 * i1 + i2][2 * j1 + j2] = p[i1][j1] * q[i2][j2];
  return m;
}

Mat4 matmul(const Mat4& a, const Mat4& b) {
  Mat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) m[i][j] += a[i][k] * b[k][j];
  return m;
}

std::array<cplx, 4> mat_apply(const Mat4& m, const std::array<cplx, 4>& v) {
  std::array<cplx, 4> out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * v[j];
  return out;
}

double norm2(const std::array<cplx, 4>& v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return acc;
}

cplx inner(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
  cplx acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void validate_table(const GateTable& gate) {
  if (!gate.is_diagonal(1e-13))
    throw DomainError("gc: gate table has amplitude outside the diagonal output set");
  for (const auto& col : gate.columns)
    if (!(col.failure >= -1e-12)) throw DomainError("gc: gate table has negative failure mass");
  if (!(gate.completeness_error() <= 1e-9))
    throw DomainError("gc: gate table columns are not complete");
  for (double f : gate.ancilla_filter)
    if (!(f > 0.0 && f <= 1.0)) throw DomainError("gc: ancilla filter must lie in (0, 1]");
}

// Raw branch maps: column k is the output on (c, b) for basis input k.
struct RawBranches {
  std::array<Mat4, 16> maps{};
  double acceptance = 1.0;
};

RawBranches simulate_branches(const GateTable& gate) {
  const auto& f = gate.ancilla_filter;

  // Hadamard on resource qubits a and d, then the ancilla filter on both.
  std::array<cplx, 16> r = chi_state().amp;
  for (int mask : {8, 1}) {
    for (int i = 0; i < 16; ++i) {
      if (i & mask) continue;
      const cplx x = r[i], y = r[i | mask];
      r[i] = kInvSqrt2 * (x + y);
      r[i | mask] = kInvSqrt2 * (x - y);
    }
  }
  double acc = 0.0;
  for (int i = 0; i < 16; ++i) {
    r[i] *= f[(i >> 3) & 1] * f[i & 1];
    acc += std::norm(r[i]);
  }
  const double scale = 1.0 / std::sqrt(acc);
  for (auto& z : r) z *= scale;

  std::array<cplx, 4> t{};
  for (int k = 0; k < 4; ++k)
    t[k] = (gate.columns[k].logical[k] + gate.columns[k].mismatch[k]) / f[k & 1];

  RawBranches out;
  out.acceptance = acc;
  for (int k = 0; k < 4; ++k) {
    const int in1 = k >> 1, in2 = k & 1;
    Vec64 v{};
    for (int j = 0; j < 16; ++j) v[(in1 << 5) | (in2 << 4) | j] = r[j];
    for (int i = 0; i < 64; ++i) {
      if (v[i] == 0.0) continue;
      v[i] *= t[2 * bit(i, kIn1) + bit(i, kD)] * t[2 * bit(i, kIn2) + bit(i, kA)];
    }
    for (int q : {kIn1, kIn2, kA, kD}) hadamard(v, q);
    for (int i = 0; i < 64; ++i) {
      const int m = 8 * bit(i, kIn1) + 4 * bit(i, kIn2) + 2 * bit(i, kA) + bit(i, kD);
      const int o = 2 * bit(i, kC) + bit(i, kB);
      out.maps[m][o][k] += v[i];
    }
  }
  return out;
}

struct Correction {
  std::array<int, 2> pauli{};
  cplx phase = 1.0;  // unit modulus
};

const std::array<Correction, 16>& corrections() {
  static const std::array<Correction, 16> table = [] {
    const RawBranches ideal = simulate_branches(ideal_cz_table());
    const Mat4 target = cnot_matrix();
    std::array<Correction, 16> out{};
    for (int m = 0; m < 16; ++m) {
      bool found = false;
      for (int p1 = 0; p1 < 4 && !found; ++p1) {
        for (int p2 = 0; p2 < 4 && !found; ++p2) {
          const Mat4 r = matmul(kron(paulis()[p1], paulis()[p2]), ideal.maps[m]);
          cplx ph = 0.0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) ph += target[i][j] * r[i][j];
          ph /= 4.0;
          if (std::abs(ph) < 1e-12) continue;
          double dev = 0.0;
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) dev = std::max(dev, std::abs(r[i][j] - ph * target[i][j]));
          if (dev < 1e-12) {
            out[m] = {{p1, p2}, std::conj(ph) / std::abs(ph)};
            found = true;
          }
        }
      }
      if (!found) throw std::logic_error("gc: no Pauli correction turns a branch into CNOT");
    }
    return out;
  }();
  return table;
}

}  // namespace

ChiState chi_state() {
  ChiState chi;
  for (int i : {0b0000, 0b1100, 0b0111, 0b1011}) chi.amp[i] = 0.5;
  return chi;
}

void DetectorModel::validate() const {
  if (!(eta >= 0.0 && eta <= 1.0)) throw DomainError("detector: eta must lie in [0, 1]");
  if (detections < 0) throw DomainError("detector: detection count must be nonnegative");
  if (!(noise_ratio >= 0.0 && noise_ratio <= 1.0)) throw DomainError("detector: noise ratio must lie in [0, 1]");
}

double DetectorModel::apply_per_qubit(double p) const {
  if (relative_noise) return p * (1.0 - noise_ratio * (1.0 - p));
  return p * std::pow(eta, 0.5 * detections);
}

Mat4 cnot_matrix() {
  Mat4 m{};
  m[0][0] = m[1][1] = m[2][3] = m[3][2] = 1.0;
  return m;
}

std::array<int, 2> feed_forward_correction(int m) {
  if (m < 0 || m > 15) throw DomainError("gc: branch index out of range");
  return corrections()[m].pauli;
}

GcCircuit::GcCircuit(const GateTable& gate) {
  validate_table(gate);
  const RawBranches raw = simulate_branches(gate);
  resource_acceptance_ = raw.acceptance;
  const auto& corr = corrections();
  for (int m = 0; m < 16; ++m) {
    Mat4 c = matmul(kron(paulis()[corr[m].pauli[0]], paulis()[corr[m].pauli[1]]), raw.maps[m]);
    for (auto& row : c)
      for (auto& z : row) z *= corr[m].phase;
    branches_[m] = c;
  }
}

std::array<cplx, 4> GcCircuit::branch_output(int m, const TwoQubitState& input) const {
  return mat_apply(branches_.at(m), input.amp);
}

GateMetrics GcCircuit::metrics(const TwoQubitState& input, const DetectorModel& detector) const {
  input.require_normalized(1e-10);
  detector.validate();
  const std::array<cplx, 4> ideal = mat_apply(cnot_matrix(), input.amp);

  const std::array<cplx, 4> ref = branch_output(0, input);
  const double ref2 = norm2(ref);
  if (!(ref2 > 0.0)) throw UndefinedFidelityError("gc: reference branch has zero norm");

  GateMetrics g;
  g.fidelity = std::min(1.0, std::abs(inner(ideal, ref)) / std::sqrt(ref2));
  g.ps_per_qubit = detector.apply_per_qubit(4.0 * std::sqrt(ref2));
  g.ps_two_qubit = g.ps_per_qubit * g.ps_per_qubit;

  double total = 0.0, num = 0.0;
  for (int m = 0; m < 16; ++m) {
    const std::array<cplx, 4> o = branch_output(m, input);
    total += norm2(o);
    num += std::norm(inner(ideal, o));
  }
  g.fidelity_branch_average = std::min(1.0, std::sqrt(num / total));
  const double per = detector.apply_per_qubit(std::sqrt(total));
  g.ps_two_qubit_branch_total = per * per;
  return g;
}

GateMetrics simulate_gc_circuit(const GateTable& gate, const TwoQubitState& input,
                                const DetectorModel& detector) {
  return GcCircuit(gate).metrics(input, detector);
}

ClosedFormIntermediates closed_form_intermediates(const TwoQubitState& input, double tau,
                                                  const MismatchConfig& mismatch, bool as_printed) {
  mismatch.validate();
  const double G = mismatch.gamma_overlap;
  const double s = mismatch.mismatch_weight();
  ClosedFormIntermediates ci;
  auto& a = ci.a;
  a[0] = tau + tau * G + s;
  a[1] = tau - tau * G + s;
  a[2] = tau - tau * G - s;
  a[3] = tau + tau * G - s;
  const cplx al = input.alpha(), ep = input.epsilon();
  const cplx be = as_printed ? input.beta() : input.delta();
  const cplx de = as_printed ? input.delta() : input.beta();
  ci.A[0] = al * a[0] * a[0] + input.beta() * a[0] * a[1] + input.delta() * a[0] * a[1] + ep * a[1] * a[1];
  ci.A[1] = al * a[0] * a[2] + be * a[1] * a[2] + de * a[0] * a[3] + ep * a[1] * a[3];
  ci.A[2] = al * a[0] * a[2] + be * a[0] * a[3] + de * a[1] * a[2] + ep * a[1] * a[3];
  ci.A[3] = al * a[2] * a[2] + input.beta() * a[2] * a[3] + input.delta() * a[2] * a[3] + ep * a[3] * a[3];
  return ci;
}

GateMetrics closed_form_metrics(const TwoQubitState& input, double tau, double lambda, double kappa,
                                const MismatchConfig& mismatch, const DetectorModel& detector,
                                bool as_printed) {
  input.require_normalized(1e-10);
  detector.validate();
  if (!(tau > 0.0)) throw DomainError("closed form: tau <= 0, distillation undefined");
  const ClosedFormIntermediates ci = closed_form_intermediates(input, tau, mismatch, as_printed);
  const double normA = std::sqrt(norm2(ci.A));
  if (!(normA > 0.0)) throw UndefinedFidelityError("closed form: all A_i vanish");

  const double e1 = std::exp(-lambda / kappa);
  const double prefactor = e1 * e1 * std::pow(tau, 2.0 / kappa) /
                           (2.0 * (1.0 + e1 * std::pow(tau, 2.0 + 1.0 / kappa)));
  GateMetrics g;
  g.fidelity = std::min(1.0, std::abs(inner(input.amp, ci.A)) / normA);
  g.ps_per_qubit = detector.apply_per_qubit(prefactor * normA);
  g.ps_two_qubit = g.ps_per_qubit * g.ps_per_qubit;
  g.fidelity_branch_average = g.fidelity;
  g.ps_two_qubit_branch_total = g.ps_two_qubit;
  return g;
}

GateTable gc_gate_table(double tau, double lambda, double kappa, const MismatchConfig& mismatch,
                        DistillationMode mode) {
  if (mode == DistillationMode::full) return distilled_cz_table(tau, lambda, kappa, mismatch);
  return raw_cz_table(tau, lambda, kappa, mismatch);
}

namespace {

TwoQubitState from_params(const double* x) {
  std::array<cplx, 4> a{};
  for (int i = 0; i < 4; ++i) a[i] = {x[i], x[4 + i]};
  return TwoQubitState::normalized(a);
}

struct SearchContext {
  const GcCircuit* circuit;
  WorstCaseMetric metric;
};

double objective(const GcCircuit& c, WorstCaseMetric metric, const TwoQubitState& s) {
  const GateMetrics g = c.metrics(s);
  return metric == WorstCaseMetric::fidelity ? g.fidelity : g.ps_per_qubit;
}

double gsl_objective(const gsl_vector* v, void* params) {
  auto* ctx = static_cast<SearchContext*>(params);
  double x[8];
  double n2 = 0.0;
  for (int i = 0; i < 8; ++i) {
    x[i] = gsl_vector_get(v, i);
    n2 += x[i] * x[i];
  }
  if (!(n2 > 1e-300)) return 2.0;
  try {
    return objective(*ctx->circuit, ctx->metric, from_params(x));
  } catch (const std::exception&) {
    return 2.0;
  }
}

TwoQubitState canonical_phase(const TwoQubitState& s) {
  int k = 0;
  for (int i = 1; i < 4; ++i)
    if (std::abs(s.amp[i]) > std::abs(s.amp[k]) + 1e-12) k = i;
  const cplx ph = std::conj(s.amp[k]) / std::abs(s.amp[k]);
  TwoQubitState out = s;
  for (auto& z : out.amp) z *= ph;
  return out;
}

}  // namespace

WorstCaseResult worst_case_search(const GcCircuit& circuit, WorstCaseMetric metric,
                                  const WorstCaseOptions& options) {
  detail::gsl_quiet();
  std::mt19937_64 rng(options.seed);
  struct Sample {
    double value;
    TwoQubitState state;
  };
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(options.samples));
  for (int i = 0; i < options.samples; ++i) {
    const TwoQubitState s = TwoQubitState::random(rng);
    samples.push_back({objective(circuit, metric, s), s});
  }
  const int starts = std::clamp(options.refine_starts, 0, static_cast<int>(samples.size()));
  std::partial_sort(samples.begin(), samples.begin() + starts, samples.end(),
                    [](const Sample& a, const Sample& b) { return a.value < b.value; });

  WorstCaseResult best{samples.front().state, samples.front().value};
  SearchContext ctx{&circuit, metric};
  gsl_multimin_function fn{&gsl_objective, 8, &ctx};
  gsl_vector* x = gsl_vector_alloc(8);
  gsl_vector* step = gsl_vector_alloc(8);
  gsl_multimin_fminimizer* solver = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 8);
  for (int sidx = 0; sidx < starts; ++sidx) {
    TwoQubitState cur = samples[sidx].state;
    // Restarted simplex: each pass begins from the previous optimum with a smaller step.
    for (double sz : {0.2, 0.02, 0.002}) {
      for (int i = 0; i < 4; ++i) {
        gsl_vector_set(x, i, cur.amp[i].real());
        gsl_vector_set(x, 4 + i, cur.amp[i].imag());
      }
      gsl_vector_set_all(step, sz);
      gsl_multimin_fminimizer_set(solver, &fn, x, step);
      for (int it = 0; it < 4000; ++it) {
        if (gsl_multimin_fminimizer_iterate(solver) != GSL_SUCCESS) break;
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(solver), 1e-10) == GSL_SUCCESS) break;
      }
      double xs[8];
      for (int i = 0; i < 8; ++i) xs[i] = gsl_vector_get(solver->x, i);
      cur = from_params(xs);
    }
    const double v = objective(circuit, metric, cur);
    if (v < best.value) best = {cur, v};
  }
  gsl_multimin_fminimizer_free(solver);
  gsl_vector_free(step);
  gsl_vector_free(x);
  best.state = canonical_phase(best.state);
  return best;
}

WorstCaseResult worst_case_search(WorstCaseMetric metric, const ChainConfig& config,
                                  const MismatchConfig& mismatch, DistillationMode mode,
                                  const WorstCaseOptions& options) {
  config.validate();
  const double tau = tau_closed_form(config.n, config.lambda);
  return worst_case_search(GcCircuit(gc_gate_table(tau, config.lambda, config.kappa, mismatch, mode)),
                           metric, options);
}

}  // namespace zeno
