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

#include "zeno/tau.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "zeno/errors.hpp"

// The two-photon sector of one segment, restricted to the symmetric pair
// (|11>, (|20> - |02>)/sqrt2), is the 2x2 matrix
//   [[c, -s], [r s, r c]],  c = cos(pi/n), s = sin(pi/n), r = sqrt(gamma2),
// whose eigenvalues mu = (g +- d/sqrt2)/2 have product r and
// tau = (mu+^n + mu-^n)/2 - (h/4) (mu+^n - mu-^n)/(mu+ - mu-).
// The discriminant delta^2 = d^2/2 = g^2 - 4r is evaluated as
// w^2 - s^2 (2 - w)^2 with w = 1 - r, which stays accurate as r -> 1.

namespace zeno {

namespace {

struct SegmentCoefficients {
  double c, s, r, w;
  double g, h, delta2;
};

SegmentCoefficients coefficients(int n, double r, double w) {
  SegmentCoefficients k{};
  k.c = std::cos(std::numbers::pi / n);
  k.s = std::sin(std::numbers::pi / n);
  k.r = r;
  k.w = w;
  k.g = k.c * (1.0 + r);
  k.h = -2.0 * k.c * w;
  const double sw = k.s * (2.0 - w);
  k.delta2 = (w - sw) * (w + sw);
  return k;
}

SegmentCoefficients coefficients_from_lambda(int n, double lambda) {
  if (std::isinf(lambda)) return coefficients(n, 0.0, 1.0);
  const double x = -lambda / (2.0 * n);
  return coefficients(n, std::exp(x), -std::expm1(x));
}

}  // namespace

TauClosedFormIntermediates tau_intermediates(int n, double gamma2) {
  if (n < 2) throw DomainError("tau: n must be at least 2");
  if (!(gamma2 >= 0.0 && gamma2 <= 1.0)) throw DomainError("tau: gamma2 must lie in [0, 1]");
  const double r = std::sqrt(gamma2);
  const SegmentCoefficients k = coefficients(n, r, 1.0 - r);
  TauClosedFormIntermediates out;
  out.g = k.g;
  out.h = k.h;
  out.d = std::sqrt(std::complex<double>(2.0 * k.delta2, 0.0));
  return out;
}

TauEvaluation evaluate_tau(int n, double lambda) {
  if (n < 2) throw DomainError("tau: n must be at least 2");
  if (!(lambda >= 0.0)) throw DomainError("tau: lambda must be nonnegative");
  const SegmentCoefficients k = coefficients_from_lambda(n, lambda);
  const double nd = static_cast<double>(n);

  TauEvaluation ev;
  std::complex<double> pp, pm, d;  // mu+^n, mu-^n, d for the literal form
  if (k.delta2 < 0.0) {
    ev.oscillatory = true;
    const double q = std::sqrt(-k.delta2);
    const double phi = std::atan2(q, k.g);
    const double rho = std::sqrt(k.r);
    const double rho_n = std::exp(nd * std::log(rho));
    const double ratio = std::sin(nd * phi) / std::sin(phi);
    ev.value = rho_n * std::cos(nd * phi) - 0.25 * k.h * (rho_n / rho) * ratio;
    pp = std::polar(rho_n, nd * phi);
    pm = std::polar(rho_n, -nd * phi);
    d = std::complex<double>(0.0, std::numbers::sqrt2 * q);
  } else {
    const double delta = std::sqrt(k.delta2);
    const double mu_p = 0.5 * (k.g + delta);
    const double mu_m = k.r / mu_p;
    const double log_p = std::log(mu_p);
    const double pn = std::exp(nd * log_p);
    const double mn = (mu_m > 0.0) ? std::exp(nd * std::log(mu_m)) : 0.0;
    double dn;
    const double theta = (delta > 0.0 && mu_m > 0.0) ? std::atanh(delta / k.g) : 0.0;
    if (mu_m <= 0.0) {
      dn = pn / mu_p;
    } else if (delta == 0.0) {
      dn = nd * pn / mu_p;
    } else if (nd * theta < 1.0) {
      const double rho = std::sqrt(k.r);
      dn = std::exp((nd - 1.0) * std::log(rho)) * std::sinh(nd * theta) / std::sinh(theta);
    } else {
      dn = (pn - mn) / delta;
    }
    ev.value = 0.5 * (pn + mn) - 0.25 * k.h * dn;
    pp = pn;
    pm = mn;
    d = std::numbers::sqrt2 * delta;
  }

  // Literal expression: 2^{-n-3/2}/d [(g + d/sqrt2)^n (sqrt2 d - h) + (g - d/sqrt2)^n (sqrt2 d + h)],
  // with the 2^{-n} folded into mu^n. Ill-conditioned near d = 0, where it is skipped.
  if (std::abs(d) > 1e-6) {
    const std::complex<double> hc(k.h, 0.0);
    const std::complex<double> lit =
        (pp * (std::numbers::sqrt2 * d - hc) + pm * (std::numbers::sqrt2 * d + hc)) /
        (2.0 * std::numbers::sqrt2 * d);
    ev.imag_residue = std::abs(lit.imag());
  }
  return ev;
}

double tau_closed_form(int n, double lambda) {
  const TauEvaluation ev = evaluate_tau(n, lambda);
  if (ev.imag_residue > 1e-10 * std::max(1.0, std::abs(ev.value)))
    throw PrecisionError("tau: imaginary residue exceeds tolerance");
  return ev.value;
}

int continuum_n(double lambda, double tol, int max_n) {
  int n = 2;
  double prev = tau_closed_form(n, lambda);
  while (n < max_n) {
    const double next = tau_closed_form(2 * n, lambda);
    if (std::abs(next - prev) < tol) return n;
    n *= 2;
    prev = next;
  }
  return max_n;
}

double tau_continuum(double lambda) { return tau_closed_form(continuum_n(lambda), lambda); }

}  // namespace zeno
