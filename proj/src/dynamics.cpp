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
#include "czgrape/dynamics.hpp"

#include "czgrape/expm.hpp"

namespace czgrape {

namespace {

// exp(-i L tau) factorizes as U (x) conj(U) when L is a pure commutator
// superoperator; dissipative segments fall back to the dense Pade path.
MatX dissipationless_segment(const Mat9& h, double tau, double sign) {
  const MatX u = unitary_exponential(h, sign * tau);
  MatX r(kLiouvilleDim, kLiouvilleDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      r.block(kDim * i, kDim * j, kDim, kDim) = u(i, j) * u.conjugate();
  return r;
}

}  // namespace

MatX SuperoperatorChain::total_c() const {
  MatX t = MatX::Identity(kLiouvilleDim, kLiouvilleDim);
  for (const auto& u : Uc) t = u * t;
  return t;
}

MatX SuperoperatorChain::total_d() const {
  MatX t = MatX::Identity(kLiouvilleDim, kLiouvilleDim);
  for (const auto& u : Ud) t = u * t;
  return t;
}

MatX SuperoperatorChain::total_d_inv() const {
  MatX t = MatX::Identity(kLiouvilleDim, kLiouvilleDim);
  for (int m = segments() - 1; m >= 0; --m) t = Ud_inv[m] * t;
  return t;
}

MatX SuperoperatorChain::partial_c(int m) const {
  MatX t = total_d();
  for (int k = segments() - 1; k >= m; --k) t = Uc_inv[k] * t;
  return t;
}

MatX SuperoperatorChain::partial_d(int m) const {
  MatX t = MatX::Identity(kLiouvilleDim, kLiouvilleDim);
  for (int k = 0; k < m; ++k) t = Ud[k] * t;
  return t;
}

Mat9 SuperoperatorChain::apply(const Mat9& rho0) const {
  return unvectorize(apply_vec(vectorize(rho0)));
}

VecX SuperoperatorChain::apply_vec(const VecX& rho0) const {
  VecX v = rho0;
  for (const auto& u : Uc) v = u * v;
  for (int m = segments() - 1; m >= 0; --m) v = Ud_inv[m] * v;
  return v;
}

std::vector<Mat9> segment_unitaries_serial(const std::vector<Mat9>& hams, double tau) {
  std::vector<Mat9> us(hams.size());
  for (size_t m = 0; m < hams.size(); ++m)
    us[m] = unitary_exponential(hams[m], tau);
  return us;
}

std::vector<Mat9> segment_unitaries(const std::vector<Mat9>& hams, double tau) {
  std::vector<Mat9> us(hams.size());
  const int n = static_cast<int>(hams.size());
#pragma omp parallel for schedule(dynamic)
  for (int m = 0; m < n; ++m) us[m] = unitary_exponential(hams[m], tau);
  return us;
}

std::vector<MatX> segment_superops_serial(const std::vector<MatX>& liouvillians,
                                          double tau, double sign) {
  std::vector<MatX> us(liouvillians.size());
  for (size_t m = 0; m < liouvillians.size(); ++m)
    us[m] = matrix_exponential(complexd(0.0, -sign * tau) * liouvillians[m]);
  return us;
}

std::vector<MatX> segment_superops(const std::vector<MatX>& liouvillians,
                                   double tau, double sign) {
  std::vector<MatX> us(liouvillians.size());
  const int n = static_cast<int>(liouvillians.size());
#pragma omp parallel for schedule(dynamic)
  for (int m = 0; m < n; ++m)
    us[m] = matrix_exponential(complexd(0.0, -sign * tau) * liouvillians[m]);
  return us;
}

std::vector<Mat9> segment_hamiltonians(const PulseSequence& seq,
                                       const DeviceParams& params,
                                       CouplingModel coupling) {
  seq.validate();
  const Mat9 h0 = build_static_hamiltonian(params, coupling);
  const Mat9 nA = number_operator_A();
  std::vector<Mat9> hams(seq.segments());
  for (int m = 0; m < seq.segments(); ++m)
    hams[m] = h0 + seq.amplitudes[m] * nA;
  return hams;
}

PropagatorChain propagate_unitary(const PulseSequence& seq, const DeviceParams& params,
                                  CouplingModel coupling) {
  PropagatorChain chain;
  chain.tau = seq.tau;
  const auto hams_c = segment_hamiltonians(seq, params, coupling);
  const auto hams_d = segment_hamiltonians(seq, params, CouplingModel::Decoupled);
  chain.U_c = segment_unitaries(hams_c, seq.tau);
  chain.U_d = segment_unitaries(hams_d, seq.tau);
  const auto half_c = segment_unitaries(hams_c, 0.5 * seq.tau);
  const auto half_d = segment_unitaries(hams_d, 0.5 * seq.tau);
  const int M = seq.segments();
  chain.R_c.resize(M);
  chain.R_d.resize(M);
  chain.R_c_mid.resize(M);
  chain.R_d_mid.resize(M);
  chain.R_c[0] = chain.U_c[0];
  chain.R_d[0] = chain.U_d[0];
  chain.R_c_mid[0] = half_c[0];
  chain.R_d_mid[0] = half_d[0];
  for (int m = 1; m < M; ++m) {
    chain.R_c[m] = chain.U_c[m] * chain.R_c[m - 1];
    chain.R_d[m] = chain.U_d[m] * chain.R_d[m - 1];
    chain.R_c_mid[m] = half_c[m] * chain.R_c[m - 1];
    chain.R_d_mid[m] = half_d[m] * chain.R_d[m - 1];
  }
  return chain;
}

SuperoperatorChain propagate_superoperator(const PulseSequence& seq,
                                           const DeviceParams& params,
                                           bool dissipative, CouplingModel coupling) {
  seq.validate();
  SuperoperatorChain chain;
  chain.tau = seq.tau;
  chain.dissipative = dissipative;
  const int M = seq.segments();
  const auto hams_c = segment_hamiltonians(seq, params, coupling);
  const auto hams_d = segment_hamiltonians(seq, params, CouplingModel::Decoupled);
  chain.Uc.resize(M);
  chain.Uc_inv.resize(M);
  chain.Ud.resize(M);
  chain.Ud_inv.resize(M);
  chain.Uc_half.resize(M);
  chain.Uc_half_inv.resize(M);
  chain.Ud_half.resize(M);
  chain.Ud_half_inv.resize(M);
  const double half = 0.5 * chain.tau;
#pragma omp parallel for schedule(dynamic)
  for (int m = 0; m < M; ++m) {
    if (dissipative) {
      const MatX lc = build_liouvillian(hams_c[m], params, true);
      chain.Uc[m] = matrix_exponential(complexd(0.0, -chain.tau) * lc);
      chain.Uc_inv[m] = matrix_exponential(complexd(0.0, chain.tau) * lc);
      chain.Uc_half[m] = matrix_exponential(complexd(0.0, -half) * lc);
      chain.Uc_half_inv[m] = matrix_exponential(complexd(0.0, half) * lc);
    } else {
      chain.Uc[m] = dissipationless_segment(hams_c[m], chain.tau, 1.0);
      chain.Uc_inv[m] = dissipationless_segment(hams_c[m], chain.tau, -1.0);
      chain.Uc_half[m] = dissipationless_segment(hams_c[m], half, 1.0);
      chain.Uc_half_inv[m] = dissipationless_segment(hams_c[m], half, -1.0);
    }
    chain.Ud[m] = dissipationless_segment(hams_d[m], chain.tau, 1.0);
    chain.Ud_inv[m] = dissipationless_segment(hams_d[m], chain.tau, -1.0);
    chain.Ud_half[m] = dissipationless_segment(hams_d[m], half, 1.0);
    chain.Ud_half_inv[m] = dissipationless_segment(hams_d[m], half, -1.0);
  }
  return chain;
}

MatX total_superoperator(const PulseSequence& seq, const DeviceParams& params,
                         bool dissipative, CouplingModel coupling) {
  seq.validate();
  const auto hams = segment_hamiltonians(seq, params, coupling);
  std::vector<MatX> us(hams.size());
  const int M = static_cast<int>(hams.size());
#pragma omp parallel for schedule(dynamic)
  for (int m = 0; m < M; ++m) {
    if (dissipative) {
      us[m] = matrix_exponential(complexd(0.0, -seq.tau) *
                                 build_liouvillian(hams[m], params, true));
    } else {
      us[m] = dissipationless_segment(hams[m], seq.tau, 1.0);
    }
  }
  MatX total = MatX::Identity(kLiouvilleDim, kLiouvilleDim);
  for (const auto& u : us) total = u * total;
  return total;
}

}  // namespace czgrape
