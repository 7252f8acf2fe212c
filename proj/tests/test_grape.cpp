/* Copyright 2026 The czgrape Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "czgrape/grape.hpp"
#include "czgrape/units.hpp"
#include "test_util.hpp"

using namespace czgrape;
using test::paper_device;

namespace {

PulseSequence random_pulse(int segments, double tau, std::mt19937_64& rng) {
  const double mu_r = paper_device().resonant_amplitude();
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  PulseSequence seq;
  seq.tau = tau;
  for (int m = 0; m < segments; ++m) seq.amplitudes.push_back(mu_r + jitter(rng));
  return seq;
}

const Mat9& ucz_embedded() {
  static const Mat9 u = embed_five_state(ideal_cz_5());
  return u;
}

// Eq.-10 objective with U_exp := U_d^dag U_c (constant term dropped).
double objective_protocol_I(const PulseSequence& seq, const DeviceParams& p) {
  const PropagatorChain chain = propagate_unitary(seq, p);
  return -2.0 * (ucz_embedded() * chain.gate()).trace().real();
}

// Eq.-22 objective with the simulator state, dissipation on.
double objective_protocol_II(const PulseSequence& seq, const DeviceParams& p,
                             const Mat9& rho0, const Mat9& rho_ideal) {
  const SuperoperatorChain chain = propagate_superoperator(seq, p, true);
  const Mat9 rho_T = chain.apply(rho0);
  return 2.0 - 2.0 * (rho_ideal * rho_T).trace().real();
}

GradientSequence fd_gradient(const std::function<double(const PulseSequence&)>& f,
                             const PulseSequence& seq, double eps) {
  GradientSequence k(seq.segments());
  for (int m = 0; m < seq.segments(); ++m) {
    PulseSequence plus = seq, minus = seq;
    plus.amplitudes[m] += eps;
    minus.amplitudes[m] -= eps;
    k(m) = (f(plus) - f(minus)) / (2.0 * eps);
  }
  return k;
}

// Worst deviation over the significant components, relative to the
// gradient scale (per-component ratios are meaningless near the
// envelope zeros, where |k_m| sits at the O(tau^2) error floor).
double max_rel_mismatch(const GradientSequence& k, const GradientSequence& fd) {
  const double scale = k.cwiseAbs().maxCoeff();
  double worst = 0.0;
  for (int m = 0; m < k.size(); ++m) {
    if (std::abs(k(m)) <= 1e-6 * scale) continue;
    worst = std::max(worst, std::abs(k(m) - fd(m)) / scale);
  }
  return worst;
}

}  // namespace

TEST_CASE("alpha unit conversion") {
  CHECK(alpha_to_internal(0.03) == doctest::Approx(0.03));
}

TEST_CASE("embedded gate operator carries the fixed |20> phase") {
  const Mat9 e = embed_gate_operator(ideal_cz_4());
  CHECK(e(kIdx20, kIdx20).real() == doctest::Approx(-1.0));
  CHECK(e(kIdx11, kIdx11).real() == doctest::Approx(-1.0));
  CHECK(std::abs(e(composite_index(0, 2), composite_index(0, 2))) == 0.0);
}

TEST_CASE("default input states are the four phi states") {
  const auto states = default_input_states();
  REQUIRE(states.size() == 4);
  for (const auto& psi : states) {
    CHECK(psi.size() == kDim);
    CHECK(psi.norm() == doctest::Approx(1.0));
    CHECK(std::abs(psi(kIdx20)) == 0.0);  // computational support only
  }
  // phi_1 = (|0> + |1>) (x) (|0> + i|1>) / 2.
  const VecX& phi1 = states[0];
  CHECK(std::abs(phi1(kIdx00)) == doctest::Approx(0.5));
  CHECK(std::abs(phi1(kIdx11)) == doctest::Approx(0.5));
  // Pairwise distinct.
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      CHECK(std::abs(states[i].dot(states[j])) < 1.0 - 1e-9);
}

TEST_CASE("ideal output state flips the |11> phase") {
  const VecX psi = default_input_states()[0];
  const Mat9 rho = ideal_output_state(psi);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
  // <00|rho|11> acquires the minus sign of CZ.
  const complexd in = psi(kIdx00) * std::conj(psi(kIdx11));
  CHECK(rho(kIdx00, kIdx11).real() == doctest::Approx(-in.real()));
}

TEST_CASE("protocol I gradient matches central finite differences") {
  std::mt19937_64 rng(31);
  const DeviceParams p = paper_device();
  const double eps = 1e-5;
  for (int rep = 0; rep < 3; ++rep) {
    const PulseSequence seq = random_pulse(10, 0.1, rng);
    const PropagatorChain chain = propagate_unitary(seq, p);
    const GradientSequence k = gradient_protocol_I(chain, Mat9(chain.gate()));
    const GradientSequence fd = fd_gradient(
        [&](const PulseSequence& s) { return objective_protocol_I(s, p); }, seq, eps);
    CHECK(max_rel_mismatch(k, fd) < 0.05);
  }
}

TEST_CASE("protocol I mismatch shrinks at least 2x when tau halves") {
  std::mt19937_64 rng(37);
  const DeviceParams p = paper_device();
  const double eps = 1e-5;
  const PulseSequence coarse = random_pulse(10, 0.1, rng);
  PulseSequence fine;
  fine.tau = 0.05;  // same waveform, twice the sampling
  for (double a : coarse.amplitudes) {
    fine.amplitudes.push_back(a);
    fine.amplitudes.push_back(a);
  }
  auto mismatch = [&](const PulseSequence& seq) {
    const PropagatorChain chain = propagate_unitary(seq, p);
    const GradientSequence k = gradient_protocol_I(chain, Mat9(chain.gate()));
    const GradientSequence fd = fd_gradient(
        [&](const PulseSequence& s) { return objective_protocol_I(s, p); }, seq, eps);
    return (k - fd).cwiseAbs().maxCoeff() / k.cwiseAbs().maxCoeff();
  };
  CHECK(mismatch(coarse) >= 2.0 * mismatch(fine));
}

TEST_CASE("protocol II gradient matches central finite differences") {
  std::mt19937_64 rng(41);
  const DeviceParams p = paper_device();
  const double eps = 1e-5;
  const VecX psi = default_input_states()[0];
  const Mat9 rho_in = Mat9(psi * psi.adjoint());
  const Mat9 rho_ideal = ideal_output_state(psi);
  for (int rep = 0; rep < 3; ++rep) {
    const PulseSequence seq = random_pulse(10, 0.1, rng);
    const SuperoperatorChain chain = propagate_superoperator(seq, p, true);
    const Mat9 rho_T = chain.apply(rho_in);
    const GradientSequence k = gradient_protocol_II(chain, rho_T, rho_ideal);
    const GradientSequence fd = fd_gradient(
        [&](const PulseSequence& s) {
          return objective_protocol_II(s, p, rho_in, rho_ideal);
        },
        seq, eps);
    CHECK(max_rel_mismatch(k, fd) < 0.05);
  }
}

TEST_CASE("protocol II mismatch shrinks at least 2x when tau halves") {
  std::mt19937_64 rng(43);
  const DeviceParams p = paper_device();
  const double eps = 1e-5;
  const VecX psi = default_input_states()[0];
  const Mat9 rho_in = Mat9(psi * psi.adjoint());
  const Mat9 rho_ideal = ideal_output_state(psi);
  const PulseSequence coarse = random_pulse(8, 0.1, rng);
  PulseSequence fine;
  fine.tau = 0.05;
  for (double a : coarse.amplitudes) {
    fine.amplitudes.push_back(a);
    fine.amplitudes.push_back(a);
  }
  auto mismatch = [&](const PulseSequence& seq) {
    const SuperoperatorChain chain = propagate_superoperator(seq, p, true);
    const Mat9 rho_T = chain.apply(rho_in);
    const GradientSequence k = gradient_protocol_II(chain, rho_T, rho_ideal);
    const GradientSequence fd = fd_gradient(
        [&](const PulseSequence& s) {
          return objective_protocol_II(s, p, rho_in, rho_ideal);
        },
        seq, eps);
    return (k - fd).cwiseAbs().maxCoeff() / k.cwiseAbs().maxCoeff();
  };
  CHECK(mismatch(coarse) >= 2.0 * mismatch(fine));
}

TEST_CASE("protocol II gradient is real by construction") {
  std::mt19937_64 rng(47);
  const DeviceParams p = paper_device();
  const PulseSequence seq = random_pulse(12, 0.5, rng);
  const SuperoperatorChain chain = propagate_superoperator(seq, p, true);
  const VecX psi = default_input_states()[2];
  const Mat9 rho_in = Mat9(psi * psi.adjoint());
  const Mat9 rho_T = chain.apply(rho_in);
  CHECK_NOTHROW(gradient_protocol_II(chain, rho_T, ideal_output_state(psi)));
}

TEST_CASE("update_pulse applies the descent rule") {
  PulseSequence seq;
  seq.tau = 0.5;
  seq.amplitudes = {1.0, 2.0};
  GradientSequence k(2);
  k << 0.5, -0.25;
  const PulseSequence down = update_pulse(seq, k, 0.1, true);
  CHECK(down.amplitudes[0] == doctest::Approx(0.95));
  CHECK(down.amplitudes[1] == doctest::Approx(2.025));
  const PulseSequence up = update_pulse(seq, k, 0.1, false);
  CHECK(up.amplitudes[0] == doctest::Approx(1.05));
  GradientSequence wrong(3);
  wrong.setZero();
  CHECK_THROWS_AS(update_pulse(seq, wrong, 0.1, true), LengthMismatch);
}

TEST_CASE("optimizer config validation") {
  OptimizerConfig cfg;
  cfg.max_steps = 0;
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
  cfg.max_steps = 5;
  cfg.alpha = -1.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
  cfg.alpha = 0.1;
  cfg.input_states.push_back(VecX::Zero(4));
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
}

TEST_CASE("closed loop protocol I improves the gate on a clean simulator") {
  const DeviceParams p = paper_device();
  const FlattopParams fp{mhz_to_radns(-290.6), 50.0, 4.0};
  const PulseSequence seed = flattop(fp, 0.5);
  ExperimentProvider provider;
  provider.measure_chi = [&](const PulseSequence& seq) {
    const PropagatorChain chain = propagate_unitary(seq, p);
    const auto& inputs = state_set_36();
    const Mat9 g = chain.gate();
    return qpt([&](int i) { return qst_exact(Mat9(g * inputs[i] * g.adjoint())); });
  };
  OptimizerConfig cfg;
  cfg.protocol = Protocol::I;
  cfg.alpha = 0.03;
  cfg.max_steps = 7;
  const auto records = run_optimization(cfg, p, provider, seed);
  REQUIRE(records.size() == 8);
  CHECK(records.front().F_chi < records.back().F_chi);
  CHECK(records.back().F_chi > 0.99);
  for (size_t i = 1; i < records.size(); ++i) {
    CHECK(records[i].F_chi >= records[i - 1].F_chi - 1e-6);
  }
}

TEST_CASE("closed loop protocol II improves the phi-state fidelity") {
  const DeviceParams p = paper_device();
  const FlattopParams fp{mhz_to_radns(-290.6), 50.0, 4.0};
  const PulseSequence seed = flattop(fp, 0.5);
  const auto inputs = default_input_states();
  ExperimentProvider provider;
  provider.measure_states = [&](const PulseSequence& seq) {
    const PropagatorChain chain = propagate_unitary(seq, p);
    const Mat9 g = chain.gate();
    std::vector<Mat4> out;
    for (const auto& psi : inputs) {
      const Mat9 rho = Mat9((g * psi) * (g * psi).adjoint());
      out.push_back(qst_exact(rho));
    }
    return out;
  };
  OptimizerConfig cfg;
  cfg.protocol = Protocol::II;
  cfg.alpha = 0.1;
  cfg.max_steps = 4;
  cfg.dissipative_model = false;
  const auto records = run_optimization(cfg, p, provider, seed);
  REQUIRE(records.size() == 5);
  REQUIRE(records.back().F_rho.size() == 4);
  CHECK(records.back().F_rho[0] > records.front().F_rho[0]);
  CHECK(records.back().F_rho[0] > 0.985);
}

TEST_CASE("provider failures carry the partial trajectory") {
  const DeviceParams p = paper_device();
  const FlattopParams fp{mhz_to_radns(-290.6), 50.0, 4.0};
  const PulseSequence seed = flattop(fp, 0.5);
  int calls = 0;
  ExperimentProvider provider;
  provider.measure_chi = [&](const PulseSequence&) -> Chi {
    if (++calls >= 2) throw std::runtime_error("lab went offline");
    return chi_ideal_cz();
  };
  OptimizerConfig cfg;
  cfg.protocol = Protocol::I;
  cfg.max_steps = 5;
  cfg.grad_norm_tol = 0.0;  // the ideal chi would otherwise stop step 0
  try {
    run_optimization(cfg, p, provider, seed);
    FAIL("expected ProviderFailure");
  } catch (const ProviderFailure& e) {
    CHECK(e.trajectory.size() >= 1);
  }
}

TEST_CASE("empty chains are rejected") {
  PropagatorChain chain;
  CHECK_THROWS_AS(gradient_protocol_I(chain, Mat9::Identity()), DimensionMismatch);
  SuperoperatorChain schain;
  CHECK_THROWS_AS(gradient_protocol_II(schain, Mat9::Identity(), Mat9::Identity()),
                  DimensionMismatch);
}
