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

#include "czgrape/basis.hpp"
#include "czgrape/system_model.hpp"
#include "czgrape/tomography.hpp"
#include "test_util.hpp"

using namespace czgrape;

TEST_CASE("pauli basis sanity") {
  const auto& p2 = pauli2();
  for (int m = 0; m < 16; ++m) {
    for (int n = 0; n < 16; ++n) {
      const complexd tr = (p2[m].adjoint() * p2[n]).trace();
      CHECK(std::abs(tr - (m == n ? complexd(4.0, 0.0) : complexd(0.0, 0.0))) < 1e-12);
    }
  }
}

TEST_CASE("pauli coefficients reconstruct the unitary") {
  std::mt19937_64 rng(3);
  const Mat4 u = test::random_unitary(4, rng);
  const auto c = pauli_coefficients(u);
  Mat4 back = Mat4::Zero();
  const auto& p2 = pauli2();
  for (int m = 0; m < 16; ++m) back += c(m) * p2[m];
  CHECK((back - u).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("ideal CZ chi is the four-corner pattern") {
  const Chi& chi = chi_ideal_cz();
  const int corners[4] = {0, 3, 12, 15};  // II, IZ, ZI, ZZ
  const double sign[4] = {1.0, 1.0, 1.0, -1.0};
  for (int m = 0; m < 16; ++m)
    for (int n = 0; n < 16; ++n) {
      bool is_corner = false;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          if (m == corners[a] && n == corners[b]) {
            is_corner = true;
            CHECK(std::abs(chi(m, n) - complexd(0.25 * sign[a] * sign[b], 0.0)) < 1e-6);
          }
      if (!is_corner) CHECK(std::abs(chi(m, n)) < 1e-6);
    }
}

TEST_CASE("state set covers 36 normalized product inputs") {
  const auto& states = state_set_36();
  for (const auto& rho : states) {
    CHECK(std::abs(rho.trace().real() - 1.0) < 1e-12);
    CHECK((rho - rho.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((rho * rho - rho).cwiseAbs().maxCoeff() < 1e-12);  // pure
  }
}

TEST_CASE("pauli expectations of a known state") {
  // |10> (A excited): <Z_A> = -1, <Z_B> = +1 with Z embedded on {0, 1}.
  Mat9 rho = Mat9::Zero();
  rho(kIdx10, kIdx10) = 1.0;
  CHECK(pauli_expectation(rho, 3, 0) == doctest::Approx(-1.0));  // Z (x) I: a indexes A
  CHECK(pauli_expectation(rho, 0, 3) == doctest::Approx(1.0));
  CHECK(pauli_expectation(rho, 1, 0) == doctest::Approx(0.0));
}

TEST_CASE("exact QST inverts states with and without leakage") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    const Mat4 target = test::random_density(4, rng);
    const Mat9 rho9 = embed_computational(target);
    const Mat4 rec = qst_exact(rho9);
    CHECK((rec - target).cwiseAbs().maxCoeff() < 1e-9);
  }
  // A little |20> population must not break positivity or the trace.
  Mat9 leaky = 0.9 * embed_computational(Mat4(test::random_density(4, rng)));
  leaky(kIdx20, kIdx20) = 0.1;
  const Mat4 rec = qst_exact(leaky);
  CHECK(std::abs(rec.trace().real() - 1.0) < 1e-9);
  Eigen::SelfAdjointEigenSolver<Mat4> es(rec);
  CHECK(es.eigenvalues().minCoeff() > -1e-10);
}

TEST_CASE("density-matrix projection clips negative eigenvalues") {
  Mat4 rho = Mat4::Zero();
  rho(0, 0) = 1.2;
  rho(1, 1) = -0.2;
  const Mat4 proj = project_density_matrix(rho);
  CHECK(std::abs(proj.trace().real() - 1.0) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Mat4> es(proj);
  CHECK(es.eigenvalues().minCoeff() >= -1e-12);
}

TEST_CASE("sampled QST converges to the exact inversion") {
  std::mt19937_64 rng(11);
  const Mat4 target = test::random_density(4, rng);
  const Mat9 rho9 = embed_computational(target);
  ReadoutModel ideal;  // disabled
  std::mt19937_64 shot_rng(1234);
  const Mat4 rec = qst_sampled(rho9, 200000, ideal, shot_rng);
  CHECK((rec - qst_exact(rho9)).cwiseAbs().maxCoeff() < 0.01);
}

TEST_CASE("readout confusion columns are probability vectors") {
  const ReadoutModel r =
      ReadoutModel::from_device(test::paper_device(), true, true);
  const Eigen::Matrix4d c = r.confusion();
  for (int j = 0; j < 4; ++j) {
    CHECK(c.col(j).sum() == doctest::Approx(1.0));
    for (int i = 0; i < 4; ++i) CHECK(c(i, j) >= 0.0);
  }
  // Perfect readout has the identity confusion matrix.
  ReadoutModel perfect;
  CHECK((perfect.confusion() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("confusion correction undoes readout corruption") {
  std::mt19937_64 rng(13);
  const Mat4 target = test::random_density(4, rng);
  const Mat9 rho9 = embed_computational(target);
  const ReadoutModel corrected =
      ReadoutModel::from_device(test::paper_device(), true, true);
  std::mt19937_64 shot_rng(99);
  const Mat4 rec = qst_sampled(rho9, 400000, corrected, shot_rng);
  CHECK((rec - qst_exact(rho9)).cwiseAbs().maxCoeff() < 0.02);
}

TEST_CASE("QPT of the identity channel") {
  const auto& inputs = state_set_36_comp();
  const Chi chi = qpt([&](int i) { return inputs[i]; });
  CHECK(std::abs(chi(0, 0) - complexd(1.0, 0.0)) < 1e-9);
  double off = 0.0;
  for (int m = 0; m < 16; ++m)
    for (int n = 0; n < 16; ++n)
      if (m != 0 || n != 0) off = std::max(off, std::abs(chi(m, n)));
  CHECK(off < 1e-9);
}

TEST_CASE("QPT reproduces the chi matrix of unitary channels") {
  std::mt19937_64 rng(17);
  const auto& inputs = state_set_36_comp();
  for (int rep = 0; rep < 5; ++rep) {
    const Mat4 u = test::random_unitary(4, rng);
    const Chi chi = qpt([&](int i) { return Mat4(u * inputs[i] * u.adjoint()); });
    const Chi ref = chi_of_unitary(u);
    CHECK((chi - ref).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(process_fidelity(chi, ref) == doctest::Approx(1.0));
  }
}

TEST_CASE("fidelity metrics") {
  const Mat4 cz = ideal_cz_4();
  CHECK(process_fidelity(chi_ideal_cz(), chi_of_unitary(cz)) == doctest::Approx(1.0));
  CHECK(operator_fidelity(cz, cz) == doctest::Approx(1.0));
  // Global phases do not matter.
  CHECK(operator_fidelity(cz, Mat4(complexd(0.0, 1.0) * cz)) == doctest::Approx(1.0));
  const Mat4 id = Mat4::Identity();
  // |Tr{CZ}| / 4 = 2/4.
  CHECK(operator_fidelity(cz, id) == doctest::Approx(0.5));
  // State fidelity against a pure ideal state.
  std::mt19937_64 rng(19);
  Eigen::Vector4cd psi;
  psi << 0.5, 0.5, 0.5, complexd(0.0, 0.5);
  const Mat4 pure = psi * psi.adjoint();
  CHECK(state_fidelity(pure, pure) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(state_fidelity(Mat4(0.25 * Mat4::Identity()), pure) == doctest::Approx(0.25));
}
