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

#ifndef ZENO_TAU_HPP
#define ZENO_TAU_HPP

#include <complex>

namespace zeno {

/// The d, g, h coefficients of the closed-form tau. g and h are real but are
/// carried as complex values alongside d.
struct TauClosedFormIntermediates {
  std::complex<double> d;
  std::complex<double> g;
  std::complex<double> h;
};

struct TauEvaluation {
  double value = 0.0;
  /// |Im| of the literal complex expression; the real value comes from the
  /// equivalent cancellation-free form.
  double imag_residue = 0.0;
  /// True when the two eigenvalues are complex conjugates.
  bool oscillatory = false;
};

/// Intermediates at per-segment two-photon transmission gamma2 in [0, 1].
TauClosedFormIntermediates tau_intermediates(int n, double gamma2);

/// Unchecked evaluation; exposes the residue. Requires n >= 2 and lambda >= 0
/// (lambda may be +inf, meaning gamma2 = 0).
TauEvaluation evaluate_tau(int n, double lambda);

/// Closed-form tau. Throws PrecisionError when the imaginary residue exceeds
/// 1e-10 relative to max(1, |tau|), DomainError for n < 2 or lambda < 0.
double tau_closed_form(int n, double lambda);

/// Smallest power of two n >= 2 with |tau(n) - tau(2n)| < tol, capped at max_n.
int continuum_n(double lambda, double tol = 1e-6, int max_n = 1 << 22);

/// tau at the continuum segment count.
double tau_continuum(double lambda);

}  // namespace zeno

#endif  // ZENO_TAU_HPP
