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

#include <stdexcept>

#include "czgrape/device.hpp"
#include "czgrape/types.hpp"

namespace czgrape {

struct NonHermitianInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Row-major vectorization: |k,l>> <-> |k><l|, component index 9k + l.
VecX vectorize(const Mat9& rho);
Mat9 unvectorize(const VecX& v);

// Superoperator of the commutator [H, .]: H (x) I - I (x) H^T.
MatX commutator_superoperator(const Mat9& h);

// 81x81 superoperator L with rho_dot = -i L rho. With dissipation, adds
// the per-qubit relaxation and pure-dephasing channels (1/T1, 1/Tphi
// element formulas over qutrit level indices) embedded into the 9-dim
// composite space.
MatX build_liouvillian(const Mat9& h, const DeviceParams& params, bool dissipative);

// i [L (x) conj(L) - (1/2)(L^dag L (x) I + I (x) (L^dag L)^T)] for an
// arbitrary jump operator; the sign convention matches rho_dot = -i L rho.
MatX lindblad_superoperator(const Mat9& jump);

}  // namespace czgrape
