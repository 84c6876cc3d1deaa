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
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zeno/errors.hpp"
#include "zeno/gc.hpp"
#include "zeno/tau.hpp"

using namespace zeno;

namespace {

double dist(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("resource state amplitudes") {
  const ChiState chi = chi_state();
  CHECK(chi.amp[0b0000] == cplx(0.5));
  CHECK(chi.amp[0b0100] == cplx(0.0));
  double n2 = 0.0;
  for (const auto& a : chi.amp) n2 += std::norm(a);
  CHECK(n2 == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("resource state reduced on the outer qubits is maximally mixed") {
  const ChiState chi = chi_state();
  cplx rho[4][4] = {};
  for (int a = 0; a < 2; ++a)
    for (int d = 0; d < 2; ++d)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int d2 = 0; d2 < 2; ++d2)
          for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
              rho[2 * a + d][2 * a2 + d2] +=
                  chi.amp[8 * a + 4 * b + 2 * c + d] * std::conj(chi.amp[8 * a2 + 4 * b + 2 * c + d2]);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(std::abs(rho[i][j] - (i == j ? 0.25 : 0.0)) < 1e-15);
}

TEST_CASE("ideal gate teleports an exact CNOT") {
  const GcCircuit c(ideal_cz_table());
  const Mat4 cnot = cnot_matrix();
  for (int k = 0; k < 4; ++k) {
    const TwoQubitState in = TwoQubitState::basis(k);
    const GateMetrics m = c.metrics(in);
    CHECK(m.fidelity == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.ps_two_qubit == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.ps_two_qubit_branch_total == doctest::Approx(1.0).epsilon(1e-14));
    for (int b = 0; b < 16; ++b) {
      const auto out = c.branch_output(b, in);
      std::array<cplx, 4> expect{};
      for (int i = 0; i < 4; ++i) expect[i] = 0.25 * cnot[i][k];
      CHECK(dist(out, expect) < 1e-14);
    }
  }
}

TEST_CASE("feed-forward corrections are Pauli pairs and trivial on the reference branch") {
  const auto c0 = feed_forward_correction(0);
  CHECK(c0[0] == 0);
  CHECK(c0[1] == 0);
  for (int m = 0; m < 16; ++m) {
    const auto c = feed_forward_correction(m);
    CHECK(c[0] >= 0);
    CHECK(c[0] < 4);
    CHECK(c[1] >= 0);
    CHECK(c[1] < 4);
  }
  CHECK_THROWS_AS(feed_forward_correction(16), DomainError);
}

TEST_CASE("distilled gate keeps unit fidelity at perfect matching") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double lam = 20.0 + 2000.0 * u(rng), kap = 100.0 * std::pow(1e5, u(rng));
    const double tau = tau_closed_form(4096, lam);
    const TwoQubitState in = TwoQubitState::random(rng);
    const GateMetrics a = simulate_gc_circuit(distilled_cz_table(tau, lam, kap, {1.0}), in);
    const GateMetrics b = closed_form_metrics(in, tau, lam, kap, {1.0});
    CHECK(std::abs(a.fidelity - 1.0) <= 1e-12);
    CHECK(std::abs(b.fidelity - 1.0) <= 1e-12);
  }
}

TEST_CASE("perfect-matching success probability") {
  for (double lam : {50.0, 300.0, 2000.0})
    for (double kap : {1e3, 1e4, 1e6}) {
      const double tau = tau_closed_form(2048, lam);
      const double T = std::exp(-lam / kap) * std::pow(tau, 1.0 + 1.0 / kap);
      const double expect = 2.0 * T * T / (1.0 + T * tau);
      const GateMetrics cf = closed_form_metrics(TwoQubitState::equal_superposition(), tau, lam, kap, {1.0});
      const GateMetrics ci = simulate_gc_circuit(distilled_cz_table(tau, lam, kap, {1.0}),
                                                 TwoQubitState::one_one());
      CHECK(std::abs(cf.ps_per_qubit - expect) < 1e-13);
      CHECK(std::abs(ci.ps_per_qubit - expect) < 1e-13);
      const ClosedFormIntermediates in =
          closed_form_intermediates(TwoQubitState::equal_superposition(), tau, {1.0});
      CHECK(in.a[1] == 0.0);
      CHECK(in.a[2] == 0.0);
      double n2 = 0.0;
      for (const auto& A : in.A) n2 += std::norm(A);
      CHECK(std::sqrt(n2) == doctest::Approx(4.0 * tau * tau).epsilon(1e-14));
    }
}

TEST_CASE("closed form agrees with the circuit on a parameter grid") {
  std::mt19937_64 rng(43);
  double worst_f = 0.0, worst_p = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        const double G = 0.9 + 0.025 * i;
        const double lam = 30.0 * std::pow(100.0, j / 4.0);
        const double kap = 1e3 * std::pow(1e3, k / 4.0);
        const double tau = tau_closed_form(continuum_n(lam), lam);
        const GcCircuit c(distilled_cz_table(tau, lam, kap, {G}));
        for (int r = 0; r < 20; ++r) {
          const TwoQubitState in = TwoQubitState::random(rng);
          const GateMetrics a = c.metrics(in);
          const GateMetrics b = closed_form_metrics(in, tau, lam, kap, {G});
          worst_f = std::max(worst_f, std::abs(a.fidelity - b.fidelity));
          worst_p = std::max(worst_p, std::abs(a.ps_per_qubit - b.ps_per_qubit));
        }
      }
  CHECK(worst_f <= 1e-9);
  CHECK(worst_p <= 1e-9);
}

TEST_CASE("reference branch equals the factorized oracle") {
  std::mt19937_64 rng(47);
  const double tau = 0.83, lam = 120.0, kap = 4e3, G = 0.93;
  const GateTable t = distilled_cz_table(tau, lam, kap, {G});
  const GcCircuit c(t);
  const double f0 = t.ancilla_filter[0], f1 = t.ancilla_filter[1];
  const double scale = 1.0 / std::sqrt(0.5 * (f0 * f0 + f1 * f1));
  std::array<cplx, 4> merged{};
  for (int i = 0; i < 4; ++i) merged[i] = (t.columns[i].logical[i] + t.columns[i].mismatch[i]) * scale;
  const Mat4 cnot = cnot_matrix();
  for (int r = 0; r < 10; ++r) {
    const TwoQubitState in = TwoQubitState::random(rng);
    const auto ref = oracle::reference_branch(merged, in.amp);
    std::array<cplx, 4> expect{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) expect[i] += cnot[i][j] * ref[j];
    CHECK(dist(c.branch_output(0, in), expect) < 1e-14);
  }
}

TEST_CASE("literal coefficient placement breaks the perfect-matching limit") {
  const TwoQubitState in = TwoQubitState::normalized({0.3, 0.8, -0.2, 0.4});
  const GateMetrics lit = closed_form_metrics(in, 0.9, 100.0, 1e4, {1.0}, {}, true);
  const GateMetrics fixd = closed_form_metrics(in, 0.9, 100.0, 1e4, {1.0});
  CHECK(fixd.fidelity == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lit.fidelity < 0.99);
}

TEST_CASE("detector efficiency only scales the success probability") {
  std::mt19937_64 rng(53);
  const GcCircuit c(distilled_cz_table(0.85, 200.0, 1e4, {0.97}));
  for (int k = 0; k < 20; ++k) {
    const TwoQubitState in = TwoQubitState::random(rng);
    const GateMetrics base = c.metrics(in);
    for (double eta : {0.0, 0.5, 0.9, 1.0}) {
      DetectorModel d;
      d.eta = eta;
      const GateMetrics m = c.metrics(in, d);
      CHECK(m.fidelity == base.fidelity);
      CHECK(m.fidelity_branch_average == base.fidelity_branch_average);
      CHECK(std::abs(m.ps_two_qubit - base.ps_two_qubit * std::pow(eta, 4)) <= 1e-15);
    }
  }
}

TEST_CASE("relative measurement noise mode") {
  DetectorModel d;
  d.relative_noise = true;
  CHECK(d.apply_per_qubit(0.9) == doctest::Approx(0.9 * (1.0 - 0.1 * 0.1)));
  CHECK(d.apply_per_qubit(1.0) == 1.0);
}

TEST_CASE("metrics ignore the global phase of the input") {
  std::mt19937_64 rng(59);
  const GcCircuit c(distilled_cz_table(0.8, 150.0, 5e3, {0.95}));
  for (int k = 0; k < 20; ++k) {
    const TwoQubitState in = TwoQubitState::random(rng);
    TwoQubitState rot = in;
    for (auto& z : rot.amp) z *= std::polar(1.0, 0.37 + k);
    const GateMetrics a = c.metrics(in), b = c.metrics(rot);
    CHECK(std::abs(a.fidelity - b.fidelity) < 1e-14);
    CHECK(std::abs(a.ps_per_qubit - b.ps_per_qubit) < 1e-14);
    const GateMetrics ca = closed_form_metrics(in, 0.8, 150.0, 5e3, {0.95});
    const GateMetrics cb = closed_form_metrics(rot, 0.8, 150.0, 5e3, {0.95});
    CHECK(std::abs(ca.fidelity - cb.fidelity) < 1e-14);
  }
}

TEST_CASE("two-qubit success is the square of the per-qubit value") {
  std::mt19937_64 rng(61);
  const GcCircuit c(distilled_cz_table(0.9, 300.0, 2e4, {1.0}));
  for (int k = 0; k < 20; ++k) {
    const GateMetrics m = c.metrics(TwoQubitState::random(rng));
    CHECK(std::abs(m.ps_two_qubit - m.ps_per_qubit * m.ps_per_qubit) <= 1e-12);
  }
}

TEST_CASE("circuit rejects malformed tables") {
  GateTable off = ideal_cz_table();
  off.columns[1].logical[2] = 0.1;
  off.columns[1].logical[1] = std::sqrt(0.99);
  CHECK_THROWS_AS(GcCircuit{off}, DomainError);
  GateTable leak = ideal_cz_table();
  leak.columns[0].logical[0] = 0.5;
  CHECK_THROWS_AS(GcCircuit{leak}, DomainError);
  GateTable neg = ideal_cz_table();
  neg.columns[2].failure = -0.5;
  CHECK_THROWS_AS(GcCircuit{neg}, DomainError);
  CHECK_THROWS_AS(closed_form_metrics(TwoQubitState::one_one(), -0.2, 10.0, 1e3, {1.0}), DomainError);
}

TEST_CASE("worst-case search is reproducible and no worse than named inputs") {
  const double lam = 369.0, kap = 1e4;
  const double tau = tau_closed_form(continuum_n(lam), lam);
  const GcCircuit c(distilled_cz_table(tau, lam, kap, {0.99}));
  WorstCaseOptions o;
  o.seed = 5;
  const WorstCaseResult f1 = worst_case_search(c, WorstCaseMetric::fidelity, o);
  const WorstCaseResult f2 = worst_case_search(c, WorstCaseMetric::fidelity, o);
  CHECK(f1.value == f2.value);
  CHECK(f1.value <= c.metrics(TwoQubitState::equal_superposition()).fidelity + 1e-12);
  const WorstCaseResult p = worst_case_search(c, WorstCaseMetric::success, o);
  CHECK(p.value <= c.metrics(TwoQubitState::one_one()).ps_per_qubit + 1e-12);
  CHECK(std::abs(p.state.norm2() - 1.0) < 1e-12);
}
