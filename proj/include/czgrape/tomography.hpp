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
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "czgrape/device.hpp"
#include "czgrape/pauli.hpp"
#include "czgrape/types.hpp"

namespace czgrape {

using Chi = Eigen::Matrix<complexd, 16, 16>;

struct TomographyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-qubit single-qubit input states |0>, |1>, (|0>+-|1>)/sqrt2,
// (|0>+-i|1>)/sqrt2, as qutrit kets.
const std::array<Eigen::Vector3cd, 6>& qst_input_states_1q();

// The 36 two-qubit product inputs, as 9-dim density matrices.
const std::array<Mat9, 36>& state_set_36();
// Same inputs restricted to the computational subspace.
const std::array<Mat4, 36>& state_set_36_comp();

struct ReadoutModel {
  double F0_A = 1.0, F1_A = 1.0, F0_B = 1.0, F1_B = 1.0;
  bool enabled = false;
  bool corrected = false;

  static ReadoutModel from_device(const DeviceParams& p, bool enabled, bool corrected);
  // 4x4 confusion matrix C_AB on outcome probabilities (column = true
  // outcome), outcomes ordered 00, 10, 01, 11 (A in the low bit).
  Eigen::Matrix4d confusion() const;
};

// Pauli expectation values <sigma_a (x) sigma_b> of a 9-dim state with
// the Paulis embedded on levels {0, 1}.
double pauli_expectation(const Mat9& rho, int a, int b);

// Exact-mode QST: linear inversion from the 15 expectation values plus
// the computational-subspace trace, then projection to the nearest
// positive-semidefinite unit-trace matrix.
Mat4 qst_exact(const Mat9& rho);

// Sampled-mode QST: 9 product-Pauli settings {X,Y,Z}x{X,Y,Z} with shots
// drawn per setting, level-2 population folded into outcome 1, optional
// readout corruption and confusion-matrix correction.
Mat4 qst_sampled(const Mat9& rho, int shots, const ReadoutModel& readout,
                 std::mt19937_64& rng);

// Nearest PSD unit-trace matrix by eigenvalue clipping + renormalization.
Mat4 project_density_matrix(const Mat4& rho);

// QPT: least squares over the 36 inputs for the chi matrix of
// rho_out = sum_mn chi_mn E_m rho_in E_n^dag, then Hermitization.
// `channel` maps an input index 0..35 to the measured output.
Chi qpt(const std::function<Mat4(int)>& channel);

double process_fidelity(const Chi& chi, const Chi& chi_ideal);
double operator_fidelity(const Mat4& u, const Mat4& v);
double state_fidelity(const Mat4& rho, const Mat4& rho_ideal);

}  // namespace czgrape
