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

#include <array>

#include "czgrape/types.hpp"

namespace czgrape {

// Single-qubit Paulis, index order {I, X, Y, Z}.
const std::array<Mat2, 4>& pauli1();

// Two-qubit operator basis E_m = sigma_a (x) sigma_b with m = 4a + b,
// ordered II, IX, IY, IZ, XI, ... ZZ.
const std::array<Mat4, 16>& pauli2();

// Pauli embedded on qutrit levels {0, 1} (zeros on level 2).
Mat3 embed_pauli_qutrit(const Mat2& p);

// 9-dim two-qutrit embedding of sigma_a (x) sigma_b.
Mat9 pauli_pair_9(int a, int b);

// Expansion coefficients c_m = Tr{E_m^dag U} / 4.
Eigen::Vector<complexd, 16> pauli_coefficients(const Mat4& u);

// chi matrix of the unitary channel U: chi_{mn} = c_m conj(c_n).
Eigen::Matrix<complexd, 16, 16> chi_of_unitary(const Mat4& u);

// chi of the ideal CZ gate (four-corner +-1/4 pattern).
const Eigen::Matrix<complexd, 16, 16>& chi_ideal_cz();

}  // namespace czgrape
