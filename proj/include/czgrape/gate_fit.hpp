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
#pragma once

#include "czgrape/powell.hpp"
#include "czgrape/tomography.hpp"

namespace czgrape {

// Best-fit gate on the computational subspace, parameterized as
// U = exp(-i H(X)) with H Hermitian built from 16 real parameters
// (4 diagonal + 6 complex upper-triangle entries). The exponential form
// keeps the candidate unitary throughout the Powell search.
struct GateOperator {
  Mat4 u = Mat4::Identity();
  VecXd params = VecXd::Zero(16);
  double objective = 0.0;
  bool converged = true;
};

Mat4 unitary_from_params(const VecXd& params);
// Generator parameters of a given unitary (H = i log U, principal branch).
VecXd params_of_unitary(const Mat4& u);
// Parameters reproducing the ideal CZ gate.
VecXd cz_params();

// Minimizes || chi(U(X)) - chi_exp ||^2 by Powell's method from the given
// initial parameter vector. converged=false after max_sweeps without
// meeting the tolerance; the best-so-far operator is still returned.
GateOperator powell_fit(const Chi& chi_exp, const VecXd& initial,
                        const PowellOptions& opts = {});

}  // namespace czgrape
