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

#ifndef ZENO_GATE_TABLE_HPP
#define ZENO_GATE_TABLE_HPP

#include <array>
#include <complex>
#include <string>

#include "json.hpp"

namespace zeno {

using cplx = std::complex<double>;

/// Logical two-qubit basis index: |xy> -> 2*x + y. For single-rail gates x is
/// the photon number of the first mode and y of the second; inside the
/// teleported CNOT x is the data qubit and y is the ancilla (chi) qubit.
inline constexpr int logical_index(int x, int y) { return 2 * x + y; }
inline constexpr std::array<const char*, 4> kLogicalLabels = {"00", "01", "10", "11"};

/// What happens to one logical input of a two-qubit gate.
struct GateColumn {
  /// Amplitudes onto the four logical outputs.
  std::array<cplx, 4> logical{};
  /// Amplitudes onto the mismatch-tagged copies of the logical outputs (the
  /// |1bar 1> style components of a partially distinguishable photon pair).
  std::array<cplx, 4> mismatch{};
  /// Probability of leaving the declared outputs: photon loss and bunching.
  double failure = 0.0;

  double retained_mass() const;
};

/// Operation table of a two-qubit gate on the logical basis.
struct GateTable {
  std::string label;
  std::array<GateColumn, 4> columns{};

  /// Per-rail amplitude transmissions acting on the second (ancilla) qubit,
  /// indexed by its logical value. They are already included in `columns`;
  /// a teleportation circuit may instead apply them to its off-line resource
  /// state. {1, 1} when the gate has no such factor.
  std::array<double, 2> ancilla_filter{1.0, 1.0};

  /// Distillation attenuator transmissions, recorded for reporting only.
  /// Zero when the table is not a distilled gate.
  std::array<double, 3> distillation_transmissions{0.0, 0.0, 0.0};

  const GateColumn& column(int x, int y) const { return columns[logical_index(x, y)]; }
  GateColumn& column(int x, int y) { return columns[logical_index(x, y)]; }

  /// Largest deviation from sum|logical|^2 + sum|mismatch|^2 + failure = 1.
  double completeness_error() const;
  /// True when every logical and mismatch amplitude is on the diagonal.
  bool is_diagonal(double tol = 1e-14) const;
  /// Diagonal logical amplitude of input |xy>.
  cplx diagonal(int index) const { return columns[index].logical[index]; }
};

/// Ideal controlled-sign table.
GateTable ideal_cz_table();

/// JSON form: {"label", "ancilla_filter", "distillation_transmissions",
/// "inputs": [{"input": "01", "logical": [[re, im] x4], "mismatch": [...],
/// "failure": f}, ...]}.
nlohmann::json to_json(const GateTable& table);
GateTable gate_table_from_json(const nlohmann::json& j);

}  // namespace zeno

#endif  // ZENO_GATE_TABLE_HPP
