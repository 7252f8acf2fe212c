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
#include "czgrape/expm.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace czgrape {

MatX matrix_exponential(const MatX& a, double scale) {
  if (!a.allFinite()) throw NonFinite("matrix_exponential: non-finite input");
  MatX scaled = scale * a;
  return scaled.exp();
}

MatX unitary_exponential(const MatX& h, double scale) {
  if (!h.allFinite()) throw NonFinite("unitary_exponential: non-finite input");
  Eigen::SelfAdjointEigenSolver<MatX> es(h);
  const VecX phases =
      (complexd(0.0, -scale) * es.eigenvalues().cast<complexd>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace czgrape
