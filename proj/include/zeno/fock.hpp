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

#ifndef ZENO_FOCK_HPP
#define ZENO_FOCK_HPP

#include <array>
#include <complex>

#include "zeno/gate_table.hpp"

namespace zeno {

/// Physical parameters of the beamsplitter/absorber chain.
struct ChainConfig {
  int n = 1;            // number of beamsplitter/absorber segments
  double lambda = 0.0;  // total absorption strength
  double kappa = 1e4;   // one-photon to two-photon transmission ratio

  /// Single-photon transmission per segment, exp(-lambda / (n kappa)).
  double gamma1() const;
  /// Two-photon transmission per segment, exp(-lambda / n).
  double gamma2() const;
  /// Single-photon transmission of the whole chain, gamma1^n = exp(-lambda / kappa).
  double gamma1_total() const;

  /// Throws DomainError unless n >= 1, lambda >= 0 and 1 < kappa < inf.
  void validate() const;

  /// Chain at the segment count given by continuum_n(lambda).
  static ChainConfig continuum(double lambda, double kappa);
};

/// Occupation (n_a, n_b) of the two modes. Enumerator value is the amplitude index.
enum class Fock : int { k00 = 0, k01 = 1, k10 = 2, k11 = 3, k20 = 4, k02 = 5 };

inline constexpr std::array<std::array<int, 2>, 6> kFockOccupations = {
    {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {0, 2}}};

/// Index of occupation (na, nb); -1 when outside the <= 2 photon space.
int fock_index(int na, int nb);

/// Two-mode state truncated at two photons, plus the probability already absorbed.
struct TwoModeState {
  std::array<cplx, 6> amplitudes{};
  double absorbed_mass = 0.0;

  static TwoModeState basis(int na, int nb);

  cplx& operator[](Fock k) { return amplitudes[static_cast<int>(k)]; }
  const cplx& operator[](Fock k) const { return amplitudes[static_cast<int>(k)]; }

  double amplitude_norm2() const;
  /// Sum of |amplitude|^2 plus absorbed mass.
  double total_mass() const { return amplitude_norm2() + absorbed_mass; }
};

/// Beamsplitter of angle theta with a^dag -> cos a^dag + sin b^dag and
/// b^dag -> -sin a^dag + cos b^dag. Throws DomainError for theta outside
/// [0, pi/2] or when total mass deviates from 1 by more than 1e-9.
TwoModeState beamsplitter_step(const TwoModeState& state, double theta);

/// Applies sqrt(gamma1) per photon to every state and an extra sqrt(gamma2)
/// to |20> and |02>. Throws DomainError unless 0 < gamma2 <= gamma1 <= 1.
TwoModeState absorber_step(const TwoModeState& state, double gamma1, double gamma2);

/// Mode crossing |na nb> -> (-1)^na |nb na> closing the chain.
TwoModeState final_crossing(const TwoModeState& state);

/// Evolves one input through the n segments and the final crossing.
TwoModeState evolve_zeno_chain(const ChainConfig& config, const TwoModeState& input);

/// Zeno CZ gate table built by evolving each single-rail logical input.
/// Photons left in |20>, |02> and absorbed mass are reported as failure.
GateTable run_zeno_chain(const ChainConfig& config);

/// tau extracted from a chain without single-photon loss: the |11> -> |11>
/// amplitude is -tau.
double chain_tau(int n, double lambda);

}  // namespace zeno

#endif  // ZENO_FOCK_HPP
