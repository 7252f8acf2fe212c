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

#include "czgrape/gate_fit.hpp"
#include "czgrape/system_model.hpp"
#include "test_util.hpp"

using namespace czgrape;

TEST_CASE("parameterization is always unitary") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    VecXd x(16);
    for (int i = 0; i < 16; ++i) x(i) = gauss(rng);
    const Mat4 u = unitary_from_params(x);
    CHECK((u * u.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("params round trip through the matrix logarithm") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 10; ++rep) {
    const Mat4 u = test::random_unitary(4, rng);
    const Mat4 back = unitary_from_params(params_of_unitary(u));
    CHECK((back - u).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("cz_params reproduce the ideal gate") {
  const Mat4 u = unitary_from_params(cz_params());
  CHECK(operator_fidelity(u, ideal_cz_4()) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("powell_fit recovers a perturbed CZ from its chi matrix") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  VecXd x_true = cz_params();
  for (int i = 0; i < 16; ++i) x_true(i) += 0.05 * gauss(rng);
  const Mat4 u_true = unitary_from_params(x_true);
  const Chi chi = chi_of_unitary(u_true);
  const GateOperator fit = powell_fit(chi, cz_params());
  CHECK(fit.objective < 1e-8);
  CHECK(operator_fidelity(fit.u, u_true) > 0.9999);
}

TEST_CASE("powell_fit from an exact initial point stays put") {
  const Chi chi = chi_of_unitary(ideal_cz_4());
  const GateOperator fit = powell_fit(chi, cz_params());
  CHECK(fit.objective < 1e-12);
  CHECK(operator_fidelity(fit.u, ideal_cz_4()) == doctest::Approx(1.0));
}

TEST_CASE("unconverged fits are flagged but still returned") {
  std::mt19937_64 rng(11);
  const Mat4 target = test::random_unitary(4, rng);
  PowellOptions opts;
  opts.max_sweeps = 1;
  const GateOperator fit = powell_fit(chi_of_unitary(target), VecXd::Zero(16), opts);
  CHECK((fit.u * fit.u.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(fit.objective >= 0.0);
}
