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
#include "czgrape/system_model.hpp"

#include <cmath>

namespace czgrape {

namespace {

Mat3 single_qutrit_hamiltonian(double omega, double delta) {
  Mat3 h = Mat3::Zero();
  h(1, 1) = omega;
  h(2, 2) = 2.0 * omega + delta;
  return h;
}

Mat3 lowering_operator() {
  Mat3 a = Mat3::Zero();
  a(0, 1) = 1.0;
  a(1, 2) = std::sqrt(2.0);
  return a;
}

Mat9 kron3(const Mat3& a, const Mat3& b) {
  Mat9 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
  return r;
}

}  // namespace

Mat9 build_static_hamiltonian(const DeviceParams& params, CouplingModel coupling) {
  const Mat3 id = Mat3::Identity();
  Mat9 h = kron3(single_qutrit_hamiltonian(params.omega_A, params.delta_A), id) +
           kron3(id, single_qutrit_hamiltonian(params.omega_B, params.delta_B));
  switch (coupling) {
    case CouplingModel::Full: {
      const Mat3 a = lowering_operator();
      const Mat3 adag = a.adjoint();
      h += params.g * (kron3(adag, a) + kron3(a, adag));
      break;
    }
    case CouplingModel::Closed5: {
      const double s2g = std::sqrt(2.0) * params.g;
      h(kIdx11, kIdx20) += s2g;
      h(kIdx20, kIdx11) += s2g;
      break;
    }
    case CouplingModel::Decoupled:
      break;
  }
  return h;
}

Mat9 build_drive_term(double mu) { return mu * number_operator_A(); }

Mat9 number_operator_A() {
  Mat9 n = Mat9::Zero();
  for (int j = 0; j < kDim; ++j) n(j, j) = static_cast<double>(level_A(j));
  return n;
}

Mat5 ideal_cz_5() {
  Mat5 u = Mat5::Identity();
  u(3, 3) = -1.0;
  u(4, 4) = -1.0;
  return u;
}

Mat4 ideal_cz_4() {
  Mat4 u = Mat4::Identity();
  u(3, 3) = -1.0;
  return u;
}

}  // namespace czgrape
