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

#include "czgrape/basis.hpp"
#include "czgrape/device.hpp"
#include "czgrape/types.hpp"

namespace czgrape {

// Which exchange couplings the static Hamiltonian carries.
enum class CouplingModel {
  Full,       // full ladder interaction g(a_A^dag a_B + h.c.)
  Closed5,    // only the sqrt(2) g |11><20| coupling (closed five-state model)
  Decoupled,  // g = 0
};

// H_A (x) I + I (x) H_B + interaction, 9x9 Hermitian, rad/ns.
Mat9 build_static_hamiltonian(const DeviceParams& params,
                              CouplingModel coupling = CouplingModel::Full);

// Z-drive term mu * (n_A (x) I), diagonal.
Mat9 build_drive_term(double mu);

// Number operator n_A (x) I.
Mat9 number_operator_A();

// diag(1, 1, 1, -1, -1) on {|00>, |10>, |01>, |11>, |20>}.
Mat5 ideal_cz_5();
// Restriction diag(1, 1, 1, -1) to the computational subspace.
Mat4 ideal_cz_4();

}  // namespace czgrape
