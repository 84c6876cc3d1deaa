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

#ifndef ZENO_TWO_QUBIT_STATE_HPP
#define ZENO_TWO_QUBIT_STATE_HPP

#include <array>
#include <complex>
#include <random>
#include <string>

namespace zeno {

using cplx = std::complex<double>;

/// Pure two-qubit state alpha|00> + beta|01> + delta|10> + epsilon|11>.
struct TwoQubitState {
  std::array<cplx, 4> amp{1.0, 0.0, 0.0, 0.0};

  cplx& alpha() { return amp[0]; }
  cplx& beta() { return amp[1]; }
  cplx& delta() { return amp[2]; }
  cplx& epsilon() { return amp[3]; }
  const cplx& alpha() const { return amp[0]; }
  const cplx& beta() const { return amp[1]; }
  const cplx& delta() const { return amp[2]; }
  const cplx& epsilon() const { return amp[3]; }

  double norm2() const;

  /// Rescales to unit norm; throws DomainError for the zero vector.
  static TwoQubitState normalized(const std::array<cplx, 4>& amplitudes);
  /// Throws DomainError unless |norm2 - 1| <= 1e-12 (or tol).
  void require_normalized(double tol = 1e-12) const;

  static TwoQubitState basis(int index);
  /// (|00> + |01> + |10> + |11>) / 2
  static TwoQubitState equal_superposition();
  /// |11>
  static TwoQubitState one_one();
  /// (|00> + |01> + |10> - |11>) / 2
  static TwoQubitState minus_one_one();
  /// Haar-random pure state.
  static TwoQubitState random(std::mt19937_64& rng);

  /// Parses "equal", "one-one", "minus-one-one", or four comma separated
  /// amplitudes "a,b,c,d" with optional complex parts written re:im.
  static TwoQubitState parse(const std::string& spec);
};

/// |<a|b>|^2
double state_overlap(const TwoQubitState& a, const TwoQubitState& b);

}  // namespace zeno

#endif  // ZENO_TWO_QUBIT_STATE_HPP
