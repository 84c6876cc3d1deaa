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

#ifndef ZENO_ERRORS_HPP
#define ZENO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zeno {

/// Parameter outside the physical domain of an operation (e.g. tau <= 0 where
/// a transmission tau^(1/kappa) is required).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed-form evaluation lost too much precision to be trusted.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fidelity requested for an output with zero norm.
class UndefinedFidelityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No parameter in the searched range satisfies the requested condition.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration: threshold-curve files, sweep specs, CLI values.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace zeno

#endif  // ZENO_ERRORS_HPP
