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
#include "czgrape/liouville.hpp"

#include <cmath>

#include "czgrape/basis.hpp"

namespace czgrape {

namespace {

constexpr int vec_index(int k, int l) { return kDim * k + l; }

// Relaxation and dephasing element formulas for one qutrit, embedded
// into the composite space on qubit A (slot 0) or B (slot 1).
void add_single_qubit_dissipation(MatX& lv, int slot, double t1, double tphi) {
  const complexd iu(0.0, 1.0);
  auto compose = [slot](int own, int other) {
    return slot == 0 ? composite_index(own, other) : composite_index(other, own);
  };
  for (int k1 = 0; k1 < 3; ++k1)
    for (int l1 = 0; l1 < 3; ++l1) {
      for (int kb = 0; kb < 3; ++kb)
        for (int lb = 0; lb < 3; ++lb) {
          const int row = vec_index(compose(k1, kb), compose(l1, lb));
          // diagonal part: -(1/2)(k1+l1)/T1 and -(k1-l1)^2/Tphi
          lv(row, row) += iu * (-0.5 * (k1 + l1) / t1 -
                                static_cast<double>((k1 - l1) * (k1 - l1)) / tphi);
          // population feeding term from (k1+1, l1+1)
          const int k2 = k1 + 1, l2 = l1 + 1;
          if (k2 < 3 && l2 < 3) {
            const int col = vec_index(compose(k2, kb), compose(l2, lb));
            lv(row, col) += iu * std::sqrt(static_cast<double>(k2 * l2)) / t1;
          }
        }
    }
}

MatX kron9(const Mat9& a, const Mat9& b) {
  MatX r(kLiouvilleDim, kLiouvilleDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      r.block(kDim * i, kDim * j, kDim, kDim) = a(i, j) * b;
  return r;
}

}  // namespace

VecX vectorize(const Mat9& rho) {
  VecX v(kLiouvilleDim);
  for (int k = 0; k < kDim; ++k)
    for (int l = 0; l < kDim; ++l) v(vec_index(k, l)) = rho(k, l);
  return v;
}

Mat9 unvectorize(const VecX& v) {
  Mat9 rho;
  for (int k = 0; k < kDim; ++k)
    for (int l = 0; l < kDim; ++l) rho(k, l) = v(vec_index(k, l));
  return rho;
}

MatX commutator_superoperator(const Mat9& h) {
  const Mat9 id = Mat9::Identity();
  return kron9(h, id) - kron9(id, h.transpose());
}

MatX build_liouvillian(const Mat9& h, const DeviceParams& params, bool dissipative) {
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw NonHermitianInput("build_liouvillian: Hamiltonian is not Hermitian");
  MatX lv = commutator_superoperator(h);
  if (dissipative) {
    add_single_qubit_dissipation(lv, 0, params.T1_A, params.Tphi_A);
    add_single_qubit_dissipation(lv, 1, params.T1_B, params.Tphi_B);
  }
  return lv;
}

MatX lindblad_superoperator(const Mat9& jump) {
  const Mat9 id = Mat9::Identity();
  const Mat9 ll = jump.adjoint() * jump;
  const complexd iu(0.0, 1.0);
  return iu * (kron9(jump, jump.conjugate()) -
               0.5 * (kron9(ll, id) + kron9(id, ll.transpose())));
}

}  // namespace czgrape
