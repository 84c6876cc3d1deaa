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

#include "zeno/two_qubit_state.hpp"

#include <cmath>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno {

double TwoQubitState::norm2() const {
  double acc = 0.0;
  for (const auto& a : amp) acc += std::norm(a);
  return acc;
}

TwoQubitState TwoQubitState::normalized(const std::array<cplx, 4>& amplitudes) {
  TwoQubitState s;
  s.amp = amplitudes;
  const double n2 = s.norm2();
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw DomainError("state: cannot normalize a zero or non-finite vector");
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : s.amp) a *= inv;
  return s;
}

void TwoQubitState::require_normalized(double tol) const {
  if (std::abs(norm2() - 1.0) > tol) throw DomainError("state: input is not normalized");
}

TwoQubitState TwoQubitState::basis(int index) {
  if (index < 0 || index > 3) throw DomainError("state: basis index out of range");
  TwoQubitState s;
  s.amp = {0.0, 0.0, 0.0, 0.0};
  s.amp[index] = 1.0;
  return s;
}

TwoQubitState TwoQubitState::equal_superposition() { return normalized({1.0, 1.0, 1.0, 1.0}); }
TwoQubitState TwoQubitState::one_one() { return basis(3); }
TwoQubitState TwoQubitState::minus_one_one() { return normalized({1.0, 1.0, 1.0, -1.0}); }

TwoQubitState TwoQubitState::random(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<cplx, 4> a{};
  for (auto& z : a) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = {re, im};
  }
  return normalized(a);
}

TwoQubitState TwoQubitState::parse(const std::string& spec) {
  if (spec == "equal") return equal_superposition();
  if (spec == "one-one") return one_one();
  if (spec == "minus-one-one") return minus_one_one();
  std::array<cplx, 4> a{};
  std::stringstream ss(spec);
  std::string item;
  int count = 0;
  while (std::getline(ss, item, ',')) {
    if (count >= 4) throw ConfigError("state: expected four amplitudes in '" + spec + "'");
    try {
      const auto colon = item.find(':');
      std::size_t used = 0;
      const std::string re_s = item.substr(0, colon);
      const double re = std::stod(re_s, &used);
      if (used != re_s.size()) throw ConfigError("bad number");
      double im = 0.0;
      if (colon != std::string::npos) {
        const std::string im_s = item.substr(colon + 1);
        im = std::stod(im_s, &used);
        if (used != im_s.size()) throw ConfigError("bad number");
      }
      a[count++] = {re, im};
    } catch (const std::exception&) {
      throw ConfigError("state: cannot parse amplitude '" + item + "'");
    }
  }
  if (count != 4) throw ConfigError("state: expected four amplitudes in '" + spec + "'");
  try {
    return normalized(a);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

double state_overlap(const TwoQubitState& a, const TwoQubitState& b) {
  cplx ip = 0.0;
  for (int i = 0; i < 4; ++i) ip += std::conj(a.amp[i]) * b.amp[i];
  return std::norm(ip);
}

}  // namespace zeno
