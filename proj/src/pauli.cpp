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
#include "czgrape/pauli.hpp"

#include "czgrape/basis.hpp"
#include "czgrape/system_model.hpp"

namespace czgrape {

const std::array<Mat2, 4>& pauli1() {
  static const std::array<Mat2, 4> ps = [] {
    std::array<Mat2, 4> p;
    const complexd iu(0.0, 1.0);
    p[0] = Mat2::Identity();
    p[1] << 0, 1, 1, 0;
    p[2] << 0, -iu, iu, 0;
    p[3] << 1, 0, 0, -1;
    return p;
  }();
  return ps;
}

const std::array<Mat4, 16>& pauli2() {
  static const std::array<Mat4, 16> es = [] {
    std::array<Mat4, 16> e;
    const auto& p = pauli1();
    // Computational ordering {|00>, |10>, |01>, |11>} puts qubit A in the
    // low bit, so the outer Kronecker factor is the qubit-B Pauli.
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Mat4 m;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = p[b](i, j) * p[a];
        e[4 * a + b] = m;
      }
    return e;
  }();
  return es;
}

Mat3 embed_pauli_qutrit(const Mat2& p) {
  Mat3 r = Mat3::Zero();
  r.block<2, 2>(0, 0) = p;
  return r;
}

Mat9 pauli_pair_9(int a, int b) {
  const Mat3 pa = embed_pauli_qutrit(pauli1()[a]);
  const Mat3 pb = embed_pauli_qutrit(pauli1()[b]);
  Mat9 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.block<3, 3>(3 * i, 3 * j) = pa(i, j) * pb;
  return r;
}

Eigen::Vector<complexd, 16> pauli_coefficients(const Mat4& u) {
  Eigen::Vector<complexd, 16> c;
  const auto& es = pauli2();
  for (int m = 0; m < 16; ++m) c(m) = (es[m].adjoint() * u).trace() / 4.0;
  return c;
}

Eigen::Matrix<complexd, 16, 16> chi_of_unitary(const Mat4& u) {
  const auto c = pauli_coefficients(u);
  return c * c.adjoint();
}

const Eigen::Matrix<complexd, 16, 16>& chi_ideal_cz() {
  static const Eigen::Matrix<complexd, 16, 16> chi = chi_of_unitary(ideal_cz_4());
  return chi;
}

}  // namespace czgrape
