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
#include "czgrape/expm.hpp"
#include "czgrape/liouville.hpp"
#include "czgrape/system_model.hpp"
#include "test_util.hpp"

using namespace czgrape;
using test::paper_device;

TEST_CASE("vectorize round trip and indexing") {
  std::mt19937_64 rng(5);
  const Mat9 rho = test::random_density(9, rng);
  const VecX v = vectorize(rho);
  CHECK(v(9 * 2 + 7) == rho(2, 7));  // row-major |k,l>> component
  CHECK((unvectorize(v) - rho).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("commutator superoperator acts as [H, rho]") {
  std::mt19937_64 rng(7);
  const Mat9 h = test::random_hermitian(9, rng);
  const Mat9 rho = test::random_density(9, rng);
  const Mat9 via_super = unvectorize(commutator_superoperator(h) * vectorize(rho));
  const Mat9 direct = h * rho - rho * h;
  CHECK((via_super - direct).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("dissipation-free Liouvillian is the bare commutator") {
  std::mt19937_64 rng(9);
  const Mat9 h = test::random_hermitian(9, rng);
  const MatX lv = build_liouvillian(h, paper_device(), false);
  CHECK((lv - commutator_superoperator(h)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("non-Hermitian Hamiltonian is rejected") {
  Mat9 h = Mat9::Zero();
  h(0, 1) = complexd(0.0, 1.0);  // missing the conjugate partner
  CHECK_THROWS_AS(build_liouvillian(h, paper_device(), false), NonHermitianInput);
}

TEST_CASE("population relaxation feeds the ground state at 1/T1") {
  const DeviceParams p = paper_device();
  const MatX lv = build_liouvillian(Mat9::Zero(), p, true);
  // rho = |1><1|_A (x) |0><0|_B; rho_dot = -i L rho.
  Mat9 rho = Mat9::Zero();
  rho(kIdx10, kIdx10) = 1.0;
  const Mat9 rho_dot = unvectorize(complexd(0.0, -1.0) * (lv * vectorize(rho)));
  CHECK(rho_dot(kIdx00, kIdx00).real() == doctest::Approx(1.0 / p.T1_A));
  CHECK(rho_dot(kIdx10, kIdx10).real() == doctest::Approx(-1.0 / p.T1_A));
  // The |2> -> |1> ladder rate carries the factor 2.
  Mat9 rho2 = Mat9::Zero();
  rho2(kIdx20, kIdx20) = 1.0;
  const Mat9 rho2_dot = unvectorize(complexd(0.0, -1.0) * (lv * vectorize(rho2)));
  CHECK(rho2_dot(kIdx10, kIdx10).real() == doctest::Approx(2.0 / p.T1_A));
}

TEST_CASE("pure dephasing decays the 0-2 coherence at 4/Tphi") {
  DeviceParams p = paper_device();
  p.T1_A = p.T1_B = 1e12;  // isolate dephasing
  const MatX lv = build_liouvillian(Mat9::Zero(), p, true);
  Mat9 rho = Mat9::Zero();
  rho(kIdx00, kIdx00) = 0.5;
  rho(kIdx20, kIdx20) = 0.5;
  rho(kIdx00, kIdx20) = 0.5;
  rho(kIdx20, kIdx00) = 0.5;
  const double t = 100.0;
  // exp(-i L t) via the general exponential.
  const MatX u = matrix_exponential((complexd(0.0, -1.0) * t * lv).eval());
  const Mat9 rho_t = unvectorize(u * vectorize(rho));
  CHECK(rho_t(kIdx00, kIdx20).real() ==
        doctest::Approx(0.5 * std::exp(-4.0 * t / p.Tphi_A)).epsilon(1e-9));
  // The 0-1 coherence decays at the plain 1/Tphi rate.
  Mat9 rho01 = Mat9::Zero();
  rho01(kIdx00, kIdx00) = 0.5;
  rho01(kIdx10, kIdx10) = 0.5;
  rho01(kIdx00, kIdx10) = 0.5;
  rho01(kIdx10, kIdx00) = 0.5;
  const Mat9 rho01_t = unvectorize(u * vectorize(rho01));
  CHECK(rho01_t(kIdx00, kIdx10).real() ==
        doctest::Approx(0.5 * std::exp(-t / p.Tphi_A)).epsilon(1e-9));
}

TEST_CASE("Liouvillian propagation preserves trace and positivity over 50 ns") {
  std::mt19937_64 rng(13);
  const DeviceParams p = paper_device();
  const Mat9 h = build_static_hamiltonian(p, CouplingModel::Full) +
                 build_drive_term(p.resonant_amplitude());
  const MatX lv = build_liouvillian(h, p, true);
  const MatX u = matrix_exponential((complexd(0.0, -1.0) * 50.0 * lv).eval());
  for (int rep = 0; rep < 5; ++rep) {
    const Mat9 rho0 = test::random_density(9, rng);
    const Mat9 rho_t = unvectorize(u * vectorize(rho0));
    CHECK(std::abs(rho_t.trace().real() - 1.0) < 1e-9);
    CHECK(std::abs(rho_t.trace().imag()) < 1e-12);
    CHECK((rho_t - rho_t.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    Eigen::SelfAdjointEigenSolver<Mat9> es(0.5 * (rho_t + rho_t.adjoint()));
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("generic Lindblad superoperator matches the direct dissipator") {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Mat9 jump;
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) jump(i, j) = 0.3 * complexd(gauss(rng), gauss(rng));
  const Mat9 rho = test::random_density(9, rng);
  // rho_dot = -i L rho should equal J rho J^dag - (1/2){J^dag J, rho}.
  const Mat9 via_super =
      unvectorize(complexd(0.0, -1.0) * (lindblad_superoperator(jump) * vectorize(rho)));
  const Mat9 jj = jump.adjoint() * jump;
  const Mat9 direct = jump * rho * jump.adjoint() - 0.5 * (jj * rho + rho * jj);
  CHECK((via_super - direct).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("built-in dissipation equals a jump-operator construction") {
  const DeviceParams p = paper_device();
  const MatX built = build_liouvillian(Mat9::Zero(), p, true);
  // Assemble the same channels from explicit jump operators.
  Mat3 lower = Mat3::Zero();
  lower(0, 1) = 1.0;
  lower(1, 2) = std::sqrt(2.0);
  Mat3 nlev = Mat3::Zero();
  nlev(1, 1) = 1.0;
  nlev(2, 2) = 2.0;
  const Mat3 id3 = Mat3::Identity();
  auto kron3 = [](const Mat3& a, const Mat3& b) {
    Mat9 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
    return r;
  };
  MatX ref = MatX::Zero(kLiouvilleDim, kLiouvilleDim);
  ref += lindblad_superoperator(std::sqrt(1.0 / p.T1_A) * kron3(lower, id3));
  ref += lindblad_superoperator(std::sqrt(1.0 / p.T1_B) * kron3(id3, lower));
  // Dephasing jump sqrt(2/Tphi) n gives the (k-l)^2/Tphi coherence rate.
  ref += lindblad_superoperator(std::sqrt(2.0 / p.Tphi_A) * kron3(nlev, id3));
  ref += lindblad_superoperator(std::sqrt(2.0 / p.Tphi_B) * kron3(id3, nlev));
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 5; ++rep) {
    const Mat9 rho = test::random_density(9, rng);
    const Mat9 a = unvectorize(built * vectorize(rho));
    const Mat9 b = unvectorize(ref * vectorize(rho));
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
  }
}
