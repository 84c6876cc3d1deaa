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

#include "zeno/fock.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zeno/errors.hpp"
#include "zeno/tau.hpp"

namespace zeno {

double ChainConfig::gamma1() const { return std::exp(-lambda / (n * kappa)); }
double ChainConfig::gamma2() const { return std::exp(-lambda / n); }
double ChainConfig::gamma1_total() const { return std::exp(-lambda / kappa); }

void ChainConfig::validate() const {
  if (n < 1) throw DomainError("chain: n must be a positive integer, got " + std::to_string(n));
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw DomainError("chain: lambda must be finite and nonnegative");
  if (!(kappa > 1.0) || !std::isfinite(kappa))
    throw DomainError("chain: kappa must be finite and greater than 1");
}

ChainConfig ChainConfig::continuum(double lambda, double kappa) {
  return ChainConfig{continuum_n(lambda), lambda, kappa};
}

int fock_index(int na, int nb) {
  for (int i = 0; i < 6; ++i)
    if (kFockOccupations[i][0] == na && kFockOccupations[i][1] == nb) return i;
  return -1;
}

TwoModeState TwoModeState::basis(int na, int nb) {
  const int idx = fock_index(na, nb);
  if (idx < 0) throw DomainError("fock: occupation outside the two-photon space");
  TwoModeState s;
  s.amplitudes[idx] = 1.0;
  return s;
}

double TwoModeState::amplitude_norm2() const {
  double acc = 0.0;
  for (const auto& a : amplitudes) acc += std::norm(a);
  return acc;
}

TwoModeState beamsplitter_step(const TwoModeState& state, double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi / 2))
    throw DomainError("beamsplitter: theta must lie in [0, pi/2]");
  if (std::abs(state.total_mass() - 1.0) > 1e-9)
    throw DomainError("beamsplitter: input state is not normalized");

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double r2cs = std::numbers::sqrt2 * c * s;
  const double c2 = c * c, s2 = s * s;

  TwoModeState out = state;
  const cplx a01 = state[Fock::k01], a10 = state[Fock::k10];
  out[Fock::k10] = c * a10 - s * a01;
  out[Fock::k01] = s * a10 + c * a01;

  const cplx a20 = state[Fock::k20], a11 = state[Fock::k11], a02 = state[Fock::k02];
  out[Fock::k20] = c2 * a20 - r2cs * a11 + s2 * a02;
  out[Fock::k11] = r2cs * a20 + (c2 - s2) * a11 - r2cs * a02;
  out[Fock::k02] = s2 * a20 + r2cs * a11 + c2 * a02;
  return out;
}

TwoModeState absorber_step(const TwoModeState& state, double gamma1, double gamma2) {
  if (!(gamma1 > 0.0 && gamma1 <= 1.0) || !(gamma2 > 0.0 && gamma2 <= 1.0))
    throw DomainError("absorber: transmissions must lie in (0, 1]");
  if (gamma2 > gamma1) throw DomainError("absorber: requires gamma2 <= gamma1");

  const double t1 = std::sqrt(gamma1);
  const double t2 = std::sqrt(gamma2);
  TwoModeState out = state;
  const double before = state.amplitude_norm2();
  out[Fock::k01] *= t1;
  out[Fock::k10] *= t1;
  out[Fock::k11] *= gamma1;
  out[Fock::k20] *= gamma1 * t2;
  out[Fock::k02] *= gamma1 * t2;
  out.absorbed_mass += before - out.amplitude_norm2();
  return out;
}

TwoModeState final_crossing(const TwoModeState& state) {
  TwoModeState out;
  out.absorbed_mass = state.absorbed_mass;
  for (int i = 0; i < 6; ++i) {
    const int na = kFockOccupations[i][0], nb = kFockOccupations[i][1];
    const double sign = (na % 2 == 0) ? 1.0 : -1.0;
    out.amplitudes[fock_index(nb, na)] = sign * state.amplitudes[i];
  }
  return out;
}

namespace {

TwoModeState run_segments(int n, double gamma1, double gamma2, TwoModeState s) {
  const double theta = std::numbers::pi / (2.0 * n);
  for (int k = 0; k < n; ++k) {
    s = beamsplitter_step(s, theta);
    s = absorber_step(s, gamma1, gamma2);
  }
  return final_crossing(s);
}

}  // namespace

TwoModeState evolve_zeno_chain(const ChainConfig& config, const TwoModeState& input) {
  config.validate();
  return run_segments(config.n, config.gamma1(), config.gamma2(), input);
}

GateTable run_zeno_chain(const ChainConfig& config) {
  config.validate();
  GateTable table;
  table.label = "zeno-chain";
  const double g1 = config.gamma1(), g2 = config.gamma2();
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const TwoModeState out = run_segments(config.n, g1, g2, TwoModeState::basis(x, y));
      GateColumn& col = table.column(x, y);
      for (int ox = 0; ox < 2; ++ox)
        for (int oy = 0; oy < 2; ++oy)
          col.logical[logical_index(ox, oy)] = out.amplitudes[fock_index(ox, oy)];
      col.failure = out.absorbed_mass + std::norm(out[Fock::k20]) + std::norm(out[Fock::k02]);
    }
  }
  return table;
}

double chain_tau(int n, double lambda) {
  if (n < 1) throw DomainError("chain: n must be a positive integer");
  if (!(lambda >= 0.0)) throw DomainError("chain: lambda must be nonnegative");
  const double g2 = std::exp(-lambda / n);
  if (!(g2 > 0.0)) throw DomainError("chain: two-photon transmission underflows");
  const TwoModeState out = run_segments(n, 1.0, g2, TwoModeState::basis(1, 1));
  return -out[Fock::k11].real();
}

}  // namespace zeno
