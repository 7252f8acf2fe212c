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

#include <limits>
#include <random>

#include "czgrape/expm.hpp"
#include "test_util.hpp"

using namespace czgrape;

namespace {

// Brute-force Taylor series with term-by-term convergence check; only
// usable for moderate norms, which is exactly what the oracle needs.
MatX taylor_expm(const MatX& a) {
  MatX sum = MatX::Identity(a.rows(), a.cols());
  MatX term = sum;
  for (int k = 1; k < 200; ++k) {
    term = (term * a / static_cast<double>(k)).eval();
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  return sum;
}

}  // namespace

TEST_CASE("expm of zero is the identity") {
  const MatX z = MatX::Zero(9, 9);
  CHECK((matrix_exponential(z) - MatX::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("expm matches a Taylor oracle on random matrices") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int rep = 0; rep < 10; ++rep) {
    MatX a(9, 9);
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) a(i, j) = complexd(gauss(rng), gauss(rng));
    a *= 0.5;
    const MatX pade = matrix_exponential(a);
    const MatX taylor = taylor_expm(a);
    CHECK((pade - taylor).cwiseAbs().maxCoeff() < 1e-11 * taylor.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("expm scale parameter") {
  std::mt19937_64 rng(23);
  const MatX a = test::random_hermitian(9, rng) * complexd(0.0, -1.0);
  const MatX direct = matrix_exponential((0.3 * a).eval());
  const MatX scaled = matrix_exponential(a, 0.3);
  CHECK((direct - scaled).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("expm obeys the group property") {
  std::mt19937_64 rng(29);
  const MatX a = test::random_hermitian(9, rng) * complexd(0.0, -1.0);
  const MatX half = matrix_exponential(a, 0.5);
  const MatX full = matrix_exponential(a, 1.0);
  CHECK((half * half - full).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("unitary exponential is exactly unitary") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 5; ++rep) {
    const MatX h = test::random_hermitian(9, rng) * 3.0;
    const MatX u = unitary_exponential(h, 0.7);
    CHECK((u * u.adjoint() - MatX::Identity(9, 9)).cwiseAbs().maxCoeff() < 1e-13);
    const MatX ref = matrix_exponential((complexd(0.0, -0.7) * h).eval());
    CHECK((u - ref).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("non-finite input throws") {
  MatX a = MatX::Zero(3, 3);
  a(1, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(matrix_exponential(a), NonFinite);
}
