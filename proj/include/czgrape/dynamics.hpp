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

#include <vector>

#include "czgrape/liouville.hpp"
#include "czgrape/pulse.hpp"
#include "czgrape/system_model.hpp"

namespace czgrape {

// Per-segment unitaries U_{c;m} = exp(-i H_{c;m} tau) (coupled) and
// U_{d;m} = exp(-i H_{d;m} tau) (decoupled), with cumulative products
// R_{x;m} = U_{x;m} ... U_{x;1}. Index m is 1-based in the maths and
// 0-based in the vectors. R_mid stops at the segment midpoint,
// R_mid_{x;m} = U_{x;m}^{1/2} U_{x;m-1} ... U_{x;1}; inserting the
// gradient operator there instead of at the segment edge removes the
// adjacent-segment averaging of the edge convention and leaves an
// O(tau^2) finite-difference error.
struct PropagatorChain {
  double tau = 0.0;
  std::vector<Mat9> U_c, U_d;
  std::vector<Mat9> R_c, R_d;
  std::vector<Mat9> R_c_mid, R_d_mid;

  int segments() const { return static_cast<int>(U_c.size()); }
  const Mat9& total_c() const { return R_c.back(); }
  const Mat9& total_d() const { return R_d.back(); }
  // U_d^dag U_c restricted to the computational subspace / 5-state set.
  Mat9 gate() const { return total_d().adjoint() * total_c(); }
};

// Per-segment Liouville propagators. The coupled direction carries the
// dissipation channels; the decoupled one never does, so its inverse is
// the exact exp(+i L tau). Partial products R_{c;m}, R_{d;m} follow the
// protocol-II gradient convention:
//   R_{c;m} = Uc_{m+1}^-1 ... Uc_M^-1 Ud,   R_{d;m} = Ud_m ... Ud_1.
struct SuperoperatorChain {
  double tau = 0.0;
  bool dissipative = false;
  std::vector<MatX> Uc, Uc_inv, Ud, Ud_inv;
  // Half-segment propagators for the midpoint gradient insertion.
  std::vector<MatX> Uc_half, Uc_half_inv, Ud_half, Ud_half_inv;

  int segments() const { return static_cast<int>(Uc.size()); }

  MatX total_c() const;      // Uc_M ... Uc_1
  MatX total_d() const;      // Ud_M ... Ud_1
  MatX total_d_inv() const;  // Ud_1^-1 ... Ud_M^-1

  MatX partial_c(int m) const;  // R_{c;m}, m in 1..M
  MatX partial_d(int m) const;  // R_{d;m}, m in 1..M

  // rho(T) = Ud^-1 Uc rho(0)
  Mat9 apply(const Mat9& rho0) const;
  VecX apply_vec(const VecX& rho0) const;
};

// Segment-exponential kernels. The OpenMP versions parallelize over
// segments; the serial versions are the reference implementations the
// tests compare against.
std::vector<Mat9> segment_unitaries_serial(const std::vector<Mat9>& hams, double tau);
std::vector<Mat9> segment_unitaries(const std::vector<Mat9>& hams, double tau);
std::vector<MatX> segment_superops_serial(const std::vector<MatX>& liouvillians,
                                          double tau, double sign);
std::vector<MatX> segment_superops(const std::vector<MatX>& liouvillians,
                                   double tau, double sign);

// Coupled/decoupled Hamiltonians per segment: H0(g) + mu_m n_A and
// H0(g=0) + mu_m n_A.
std::vector<Mat9> segment_hamiltonians(const PulseSequence& seq,
                                       const DeviceParams& params,
                                       CouplingModel coupling);

PropagatorChain propagate_unitary(const PulseSequence& seq, const DeviceParams& params,
                                  CouplingModel coupling = CouplingModel::Full);

SuperoperatorChain propagate_superoperator(const PulseSequence& seq,
                                           const DeviceParams& params,
                                           bool dissipative = true,
                                           CouplingModel coupling = CouplingModel::Full);

// Total Liouville propagator Uc_M ... Uc_1 for the given pulse, without
// the partial-product bookkeeping. Used for fine-grid emulation where
// only rho(T) is needed.
MatX total_superoperator(const PulseSequence& seq, const DeviceParams& params,
                         bool dissipative, CouplingModel coupling = CouplingModel::Full);

}  // namespace czgrape
