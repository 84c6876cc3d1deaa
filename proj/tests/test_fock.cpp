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
#include <limits>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zeno/errors.hpp"
#include "zeno/fock.hpp"
#include "zeno/tau.hpp"

using namespace zeno;
using std::numbers::pi;

namespace {

TwoModeState random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  TwoModeState s;
  double acc = 0.0;
  for (auto& a : s.amplitudes) {
    a = {g(rng), g(rng)};
    acc += std::norm(a);
  }
  for (auto& a : s.amplitudes) a /= std::sqrt(acc);
  return s;
}

}  // namespace

TEST_CASE("chain config derives transmissions") {
  const ChainConfig c{16, 3.0, 250.0};
  CHECK(c.gamma1() == doctest::Approx(std::exp(-3.0 / 4000.0)).epsilon(1e-15));
  CHECK(c.gamma2() == doctest::Approx(std::exp(-3.0 / 16.0)).epsilon(1e-15));
  CHECK(c.gamma1_total() == doctest::Approx(std::exp(-3.0 / 250.0)).epsilon(1e-15));
  CHECK_THROWS_AS((ChainConfig{0, 1.0, 10.0}.validate()), DomainError);
  CHECK_THROWS_AS((ChainConfig{4, -1.0, 10.0}.validate()), DomainError);
  CHECK_THROWS_AS((ChainConfig{4, 1.0, 1.0}.validate()), DomainError);
}

TEST_CASE("transmission ordering and power relation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 500; ++k) {
    const ChainConfig c{1 + static_cast<int>(u(rng) * 200), 50.0 * u(rng), 1.0 + std::pow(10.0, 6.0 * u(rng))};
    const double g1 = c.gamma1(), g2 = c.gamma2();
    CHECK(g2 > 0.0);
    CHECK(g2 <= g1);
    CHECK(g1 <= 1.0);
    // rounding in g1 is amplified kappa-fold by the power
    CHECK(std::abs(std::pow(g1, c.kappa) - g2) <= 4.0 * c.kappa * 0x1p-52 * g2);
  }
}

TEST_CASE("beamsplitter full swap of a single photon") {
  const TwoModeState out = beamsplitter_step(TwoModeState::basis(0, 1), pi / 2);
  CHECK(std::abs(out[Fock::k10] + 1.0) < 1e-15);
  CHECK(std::abs(out[Fock::k01]) < 1e-15);
}

TEST_CASE("beamsplitter balanced two-photon interference") {
  const TwoModeState out = beamsplitter_step(TwoModeState::basis(1, 1), pi / 4);
  CHECK(std::abs(out[Fock::k11]) < 1e-15);
  CHECK(std::norm(out[Fock::k20]) == doctest::Approx(0.5));
  CHECK(std::norm(out[Fock::k02]) == doctest::Approx(0.5));
}

TEST_CASE("beamsplitter full swap of a photon pair") {
  const TwoModeState out = beamsplitter_step(TwoModeState::basis(1, 1), pi / 2);
  CHECK(std::abs(out[Fock::k11] + 1.0) < 1e-15);
  CHECK(std::abs(out[Fock::k20]) < 1e-15);
  CHECK(std::abs(out[Fock::k02]) < 1e-15);
}

TEST_CASE("beamsplitter matches the creation-operator expansion") {
  for (double theta : {0.0, 0.1, 0.5, pi / 4, 1.2, pi / 2}) {
    const oracle::Mat6 m = oracle::beamsplitter_matrix(theta);
    for (int col = 0; col < 6; ++col) {
      const auto occ = kFockOccupations[col];
      const TwoModeState out = beamsplitter_step(TwoModeState::basis(occ[0], occ[1]), theta);
      for (int row = 0; row < 6; ++row) CHECK(std::abs(out.amplitudes[row] - m[row][col]) < 1e-14);
    }
  }
}

TEST_CASE("beamsplitter rejects bad input") {
  TwoModeState s = TwoModeState::basis(1, 0);
  CHECK_THROWS_AS(beamsplitter_step(s, -0.1), DomainError);
  CHECK_THROWS_AS(beamsplitter_step(s, 2.0), DomainError);
  s.amplitudes[0] = 1e-4;
  CHECK_THROWS_AS(beamsplitter_step(s, 0.3), DomainError);
}

TEST_CASE("beamsplitter preserves norm and photon number") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, pi / 2);
  for (int k = 0; k < 200; ++k) {
    const TwoModeState s = random_state(rng);
    const TwoModeState o = beamsplitter_step(s, u(rng));
    CHECK(std::abs(o.total_mass() - 1.0) < 1e-14);
    CHECK(std::abs(o[Fock::k00] - s[Fock::k00]) < 1e-15);
    const double one_in = std::norm(s[Fock::k01]) + std::norm(s[Fock::k10]);
    const double one_out = std::norm(o[Fock::k01]) + std::norm(o[Fock::k10]);
    CHECK(std::abs(one_in - one_out) < 1e-14);
  }
}

TEST_CASE("absorber examples") {
  TwoModeState s = TwoModeState::basis(1, 1);
  const TwoModeState same = absorber_step(s, 1.0, 1.0);
  CHECK(same[Fock::k11] == cplx(1.0));
  CHECK(same.absorbed_mass == 0.0);

  const TwoModeState one = absorber_step(TwoModeState::basis(0, 1), 0.81, 0.5);
  CHECK(one[Fock::k01].real() == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(one.absorbed_mass == doctest::Approx(0.19).epsilon(1e-14));

  const TwoModeState pair = absorber_step(TwoModeState::basis(2, 0), 1.0, 0.25);
  CHECK(pair[Fock::k20].real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(pair.absorbed_mass == doctest::Approx(0.75).epsilon(1e-15));

  const TwoModeState both = absorber_step(TwoModeState::basis(1, 1), 0.64, 0.25);
  CHECK(both[Fock::k11].real() == doctest::Approx(0.64).epsilon(1e-15));
}

TEST_CASE("absorber rejects transmissions outside the unit interval") {
  const TwoModeState s = TwoModeState::basis(1, 0);
  CHECK_THROWS_AS(absorber_step(s, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(absorber_step(s, 1.5, 0.5), DomainError);
  CHECK_THROWS_AS(absorber_step(s, 0.5, -0.1), DomainError);
  CHECK_THROWS_AS(absorber_step(s, 0.5, 0.9), DomainError);
}

TEST_CASE("final crossing relabels modes with the documented sign") {
  const TwoModeState a = final_crossing(TwoModeState::basis(1, 0));
  CHECK(a[Fock::k01] == cplx(-1.0));
  const TwoModeState b = final_crossing(TwoModeState::basis(0, 1));
  CHECK(b[Fock::k10] == cplx(1.0));
  const TwoModeState c = final_crossing(TwoModeState::basis(1, 1));
  CHECK(c[Fock::k11] == cplx(-1.0));
  const TwoModeState d = final_crossing(TwoModeState::basis(2, 0));
  CHECK(d[Fock::k02] == cplx(1.0));
}

TEST_CASE("lossless chain is a controlled sign") {
  for (int n : {1, 2, 5, 17}) {
    for (double kappa : {2.0, 1e4}) {
      const GateTable t = run_zeno_chain({n, 0.0, kappa});
      for (int i = 0; i < 4; ++i) CHECK(std::abs(t.columns[i].logical[i] - cplx(1.0)) < 1e-13);
      for (const auto& c : t.columns) CHECK(std::abs(c.failure) < 1e-13);
    }
  }
}

TEST_CASE("single photon transmission through the chain") {
  const ChainConfig cfg{12, 4.0, 300.0};
  const GateTable t = run_zeno_chain(cfg);
  CHECK(std::abs(t.columns[1].logical[1] - std::exp(-4.0 / 600.0)) < 1e-13);
  CHECK(std::abs(t.columns[2].logical[2] - std::exp(-4.0 / 600.0)) < 1e-13);
}

TEST_CASE("chain pair amplitude agrees with the closed form") {
  const ChainConfig cfg{10, 5.0, 1e4};
  const GateTable t = run_zeno_chain(cfg);
  const double expect = -cfg.gamma1_total() * tau_closed_form(10, 5.0);
  CHECK(std::abs(t.columns[3].logical[3] - expect) < 1e-10);
  CHECK(tau_closed_form(10, 5.0) == doctest::Approx(-0.24788353759784504).epsilon(1e-13));
  CHECK(std::abs(chain_tau(10, 5.0) - tau_closed_form(10, 5.0)) < 1e-10);
}

TEST_CASE("chain table equals the dense matrix product") {
  for (int n : {2, 3, 8, 20}) {
    const ChainConfig cfg{n, 2.5, 40.0};
    const oracle::Mat6 m = oracle::chain_matrix(n, cfg.gamma1(), cfg.gamma2());
    for (int col = 0; col < 6; ++col) {
      const auto occ = kFockOccupations[col];
      const TwoModeState out = evolve_zeno_chain(cfg, TwoModeState::basis(occ[0], occ[1]));
      for (int row = 0; row < 6; ++row) CHECK(std::abs(out.amplitudes[row] - m[row][col]) < 1e-13);
    }
  }
}

TEST_CASE("evolved states conserve total mass") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    const ChainConfig cfg{2 + static_cast<int>(60 * u(rng)), 30.0 * u(rng), 1.5 + 1e4 * u(rng)};
    const TwoModeState out = evolve_zeno_chain(cfg, random_state(rng));
    CHECK(std::abs(out.total_mass() - 1.0) < 1e-12);
    CHECK(out.absorbed_mass >= 0.0);
    CHECK(run_zeno_chain(cfg).completeness_error() < 1e-12);
  }
}

TEST_CASE("tau intermediates at the transmission endpoints") {
  for (int n : {2, 3, 8, 64}) {
    const TauClosedFormIntermediates one = tau_intermediates(n, 1.0);
    CHECK(std::abs(one.h) == 0.0);
    CHECK(std::abs(one.d.real()) < 1e-15);
    CHECK(std::abs(one.d.imag()) > 0.0);
    const TauClosedFormIntermediates zero = tau_intermediates(n, 0.0);
    CHECK(std::abs(zero.d - std::numbers::sqrt2 * std::cos(pi / n)) < 1e-15);
    CHECK(std::abs(zero.h + 2.0 * std::cos(pi / n)) < 1e-15);
    CHECK(zero.d.imag() == 0.0);
  }
}

TEST_CASE("tau lossless and full-absorption limits") {
  for (int n = 2; n <= 64; ++n) CHECK(std::abs(tau_closed_form(n, 0.0) + 1.0) <= 1e-12);
  CHECK(tau_closed_form(8, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  const double inf = std::numeric_limits<double>::infinity();
  for (int n = 2; n <= 64; ++n) CHECK(std::abs(evaluate_tau(n, inf).value - std::pow(std::cos(pi / n), n)) < 1e-14);
  CHECK(tau_closed_form(8, inf) == doctest::Approx(0.5307900429449552).epsilon(1e-14));
  CHECK(std::abs(chain_tau(8, 1e3) - 0.5307900429449552) < 1e-12);
}

TEST_CASE("tau at strong finite absorption approaches the full-absorption limit") {
  // The finite-lambda correction grows like n^2 / lambda; 1e-6 holds up to n = 32.
  for (int n = 2; n <= 32; ++n) CHECK(std::abs(tau_closed_form(n, 1e3) - std::pow(std::cos(pi / n), n)) <= 1e-6);
}

TEST_CASE("closed form matches independent evaluations") {
  double worst = 0.0;
  for (int n = 2; n <= 64; ++n)
    for (double lam : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
      worst = std::max(worst, std::abs(tau_closed_form(n, lam) - oracle::tau_matrix_power(n, lam)));
      worst = std::max(worst, std::abs(tau_closed_form(n, lam) - chain_tau(n, lam)));
    }
  CHECK(worst <= 1e-9);
  for (int n : {2, 3, 5, 8, 12})
    for (double g2 : {0.95, 0.6, 0.2, 0.01})
      CHECK(std::abs(tau_closed_form(n, -n * std::log(g2)) - oracle::tau_literal(n, g2)) < 1e-11);
}

TEST_CASE("closed form stays accurate for long chains") {
  for (int n : {128, 1024, 8192, 1 << 16})
    for (double lam : {0.3, 7.0, 60.0, 400.0, 3000.0})
      CHECK(std::abs(tau_closed_form(n, lam) - oracle::tau_matrix_power(n, lam)) < 1e-9);
}

TEST_CASE("imaginary residue of the literal form is negligible") {
  for (int n : {2, 7, 64, 4096})
    for (double lam : {0.0, 0.1, 3.0, 40.0, 900.0}) CHECK(evaluate_tau(n, lam).imag_residue <= 1e-10);
}

TEST_CASE("tau rejects short chains and negative absorption") {
  CHECK_THROWS_AS(tau_closed_form(1, 1.0), DomainError);
  CHECK_THROWS_AS(tau_closed_form(4, -1.0), DomainError);
  CHECK_THROWS_AS(tau_intermediates(4, 1.5), DomainError);
}

TEST_CASE("tau is bounded and increasing in absorption") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const int n = 2 + static_cast<int>(u(rng) * 500);
    const double lam = std::pow(10.0, -3.0 + 7.0 * u(rng));
    CHECK(std::abs(tau_closed_form(n, lam)) <= 1.0);
  }
  for (int n : {4, 8, 16, 64, 256}) {
    double prev = tau_closed_form(n, 1.0);
    for (int i = 1; i <= 200; ++i) {
      const double lam = 1.0 + 99.0 * i / 200.0;
      const double cur = tau_closed_form(n, lam);
      CHECK(cur > prev);
      prev = cur;
    }
  }
}

TEST_CASE("continuum segment count converges") {
  for (double lam : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
    const int n = continuum_n(lam);
    CHECK(n >= 2);
    CHECK((n & (n - 1)) == 0);
    CHECK(std::abs(tau_closed_form(n, lam) - tau_closed_form(2 * n, lam)) < 1e-6);
  }
  CHECK(continuum_n(10.0) > continuum_n(1.0));
}
