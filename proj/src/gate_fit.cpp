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
#include "czgrape/gate_fit.hpp"

#include <cmath>

namespace czgrape {

namespace {

Mat4 hermitian_from_params(const VecXd& x) {
  Mat4 h = Mat4::Zero();
  for (int i = 0; i < 4; ++i) h(i, i) = x(i);
  int k = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      h(i, j) = complexd(x(k), x(k + 1));
      h(j, i) = std::conj(h(i, j));
      k += 2;
    }
  return h;
}

}  // namespace

Mat4 unitary_from_params(const VecXd& params) {
  const Mat4 h = hermitian_from_params(params);
  Eigen::SelfAdjointEigenSolver<Mat4> es(h);
  const Eigen::Vector4cd phases =
      (complexd(0.0, -1.0) * es.eigenvalues().cast<complexd>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

VecXd params_of_unitary(const Mat4& u) {
  Eigen::ComplexEigenSolver<Mat4> es(u);
  Mat4 h = Mat4::Zero();
  for (int k = 0; k < 4; ++k) {
    const double theta = std::arg(es.eigenvalues()(k));
    const Eigen::Vector4cd v = es.eigenvectors().col(k).normalized();
    h += -theta * (v * v.adjoint());
  }
  h = 0.5 * (h + Mat4(h.adjoint()));
  VecXd x(16);
  for (int i = 0; i < 4; ++i) x(i) = h(i, i).real();
  int k = 4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      x(k) = h(i, j).real();
      x(k + 1) = h(i, j).imag();
      k += 2;
    }
  return x;
}

VecXd cz_params() {
  VecXd x = VecXd::Zero(16);
  x(3) = kPi;  // H = pi |11><11|
  return x;
}

GateOperator powell_fit(const Chi& chi_exp, const VecXd& initial,
                        const PowellOptions& opts) {
  auto objective = [&chi_exp](const VecXd& x) {
    const Chi diff = chi_of_unitary(unitary_from_params(x)) - chi_exp;
    return diff.squaredNorm();
  };
  const PowellResult res = powell_minimize(objective, initial, opts);
  GateOperator gate;
  gate.params = res.x;
  gate.u = unitary_from_params(res.x);
  gate.objective = res.value;
  gate.converged = res.converged;
  return gate;
}

}  // namespace czgrape
