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
#include "czgrape/tomography.hpp"

#include <cmath>

#include "czgrape/basis.hpp"

namespace czgrape {

namespace {

const std::array<Mat9, 16>& pauli_pairs_9() {
  static const std::array<Mat9, 16> ps = [] {
    std::array<Mat9, 16> p;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) p[4 * a + b] = pauli_pair_9(a, b);
    return p;
  }();
  return ps;
}

// Eigenbasis of sigma_a: columns are the +1 and -1 eigenvectors.
Mat2 measurement_basis(int a) {
  Eigen::SelfAdjointEigenSolver<Mat2> es(pauli1()[a]);
  Mat2 v;
  // SelfAdjointEigenSolver sorts ascending; we want +1 first.
  v.col(0) = es.eigenvectors().col(1);
  v.col(1) = es.eigenvectors().col(0);
  return v;
}

Mat9 basis_change_9(const Mat2& va, const Mat2& vb) {
  Mat3 a3 = Mat3::Identity(), b3 = Mat3::Identity();
  a3.block<2, 2>(0, 0) = va;
  b3.block<2, 2>(0, 0) = vb;
  Mat9 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.block<3, 3>(3 * i, 3 * j) = a3(i, j) * b3;
  return r;
}

// Outcome index 2*o_B + o_A (A in the low bit) matching the
// computational-state ordering.
int outcome_index(int o_A, int o_B) { return 2 * o_B + o_A; }

struct QptSystem {
  Eigen::MatrixXcd a;                       // 576 x 256
  Eigen::ColPivHouseholderQR<MatX> solver;  // least-squares solver
};

const QptSystem& qpt_system() {
  static const QptSystem sys = [] {
    QptSystem s;
    const auto& inputs = state_set_36_comp();
    const auto& es = pauli2();
    s.a.resize(36 * 16, 256);
    for (int i = 0; i < 36; ++i)
      for (int m = 0; m < 16; ++m)
        for (int n = 0; n < 16; ++n) {
          const Mat4 term = es[m] * inputs[i] * es[n].adjoint();
          for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
              s.a(i * 16 + 4 * r + c, 16 * m + n) = term(r, c);
        }
    s.solver.compute(s.a);
    if (s.solver.rank() < 256)
      throw TomographyError("QPT input set lost informational completeness");
    return s;
  }();
  return sys;
}

}  // namespace

const std::array<Eigen::Vector3cd, 6>& qst_input_states_1q() {
  static const std::array<Eigen::Vector3cd, 6> states = [] {
    std::array<Eigen::Vector3cd, 6> s;
    const double r = 1.0 / std::sqrt(2.0);
    const complexd iu(0.0, 1.0);
    s[0] << 1, 0, 0;
    s[1] << 0, 1, 0;
    s[2] << r, r, 0;
    s[3] << r, -r, 0;
    s[4] << r, r * iu, 0;
    s[5] << r, -r * iu, 0;
    return s;
  }();
  return states;
}

const std::array<Mat9, 36>& state_set_36() {
  static const std::array<Mat9, 36> set = [] {
    std::array<Mat9, 36> rhos;
    const auto& s1 = qst_input_states_1q();
    for (int ia = 0; ia < 6; ++ia)
      for (int ib = 0; ib < 6; ++ib) {
        VecX psi = VecX::Zero(kDim);
        for (int ja = 0; ja < 3; ++ja)
          for (int jb = 0; jb < 3; ++jb)
            psi(composite_index(ja, jb)) = s1[ia](ja) * s1[ib](jb);
        rhos[6 * ia + ib] = psi * psi.adjoint();
      }
    return rhos;
  }();
  return set;
}

const std::array<Mat4, 36>& state_set_36_comp() {
  static const std::array<Mat4, 36> set = [] {
    std::array<Mat4, 36> rhos;
    for (int i = 0; i < 36; ++i) rhos[i] = restrict_computational(state_set_36()[i]);
    return rhos;
  }();
  return set;
}

ReadoutModel ReadoutModel::from_device(const DeviceParams& p, bool enabled, bool corrected) {
  ReadoutModel m;
  m.F0_A = p.F0_A;
  m.F1_A = p.F1_A;
  m.F0_B = p.F0_B;
  m.F1_B = p.F1_B;
  m.enabled = enabled;
  m.corrected = corrected;
  return m;
}

Eigen::Matrix4d ReadoutModel::confusion() const {
  Eigen::Matrix2d ca, cb;
  ca << F0_A, 1.0 - F1_A, 1.0 - F0_A, F1_A;
  cb << F0_B, 1.0 - F1_B, 1.0 - F0_B, F1_B;
  Eigen::Matrix4d c;
  for (int ra = 0; ra < 2; ++ra)
    for (int rb = 0; rb < 2; ++rb)
      for (int ta = 0; ta < 2; ++ta)
        for (int tb = 0; tb < 2; ++tb)
          c(outcome_index(ra, rb), outcome_index(ta, tb)) = ca(ra, ta) * cb(rb, tb);
  return c;
}

double pauli_expectation(const Mat9& rho, int a, int b) {
  return (rho * pauli_pairs_9()[4 * a + b]).trace().real();
}

Mat4 project_density_matrix(const Mat4& rho) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
  Eigen::Vector4d ev = es.eigenvalues().cwiseMax(0.0);
  const double tr = ev.sum();
  if (tr <= 0.0) throw TomographyError("density matrix projection: zero trace");
  ev /= tr;
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

Mat4 qst_exact(const Mat9& rho) {
  Mat4 rec = Mat4::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      rec += pauli_expectation(rho, a, b) * pauli2()[4 * a + b];
  return project_density_matrix(rec / 4.0);
}

Mat4 qst_sampled(const Mat9& rho, int shots, const ReadoutModel& readout,
                 std::mt19937_64& rng) {
  if (shots < 1) throw TomographyError("sampled QST requires shots >= 1");
  // expectations[4a+b]; identity marginals averaged over compatible settings.
  double expectations[16] = {0.0};
  double marg_count[16] = {0.0};
  expectations[0] = 1.0;
  marg_count[0] = 1.0;
  const Eigen::Matrix4d confusion = readout.confusion();
  for (int a = 1; a < 4; ++a)
    for (int b = 1; b < 4; ++b) {
      const Mat9 w = basis_change_9(measurement_basis(a), measurement_basis(b));
      const Mat9 rotated = w.adjoint() * rho * w;
      Eigen::Vector4d p = Eigen::Vector4d::Zero();
      for (int ja = 0; ja < 3; ++ja)
        for (int jb = 0; jb < 3; ++jb) {
          const int oa = ja == 0 ? 0 : 1;  // level 2 reads out as 1
          const int ob = jb == 0 ? 0 : 1;
          p(outcome_index(oa, ob)) += rotated(composite_index(ja, jb), composite_index(ja, jb)).real();
        }
      p = p.cwiseMax(0.0);
      p /= p.sum();
      if (readout.enabled) p = confusion * p;
      std::discrete_distribution<int> dist(p.data(), p.data() + 4);
      Eigen::Vector4d freq = Eigen::Vector4d::Zero();
      for (int s = 0; s < shots; ++s) freq(dist(rng)) += 1.0;
      freq /= static_cast<double>(shots);
      if (readout.enabled && readout.corrected)
        freq = confusion.colPivHouseholderQr().solve(freq);
      double e_ab = 0.0, e_a = 0.0, e_b = 0.0;
      for (int oa = 0; oa < 2; ++oa)
        for (int ob = 0; ob < 2; ++ob) {
          const double f = freq(outcome_index(oa, ob));
          e_ab += (oa == ob ? f : -f);
          e_a += (oa == 0 ? f : -f);
          e_b += (ob == 0 ? f : -f);
        }
      expectations[4 * a + b] += e_ab;
      marg_count[4 * a + b] += 1.0;
      expectations[4 * a + 0] += e_a;
      marg_count[4 * a + 0] += 1.0;
      expectations[4 * 0 + b] += e_b;
      marg_count[4 * 0 + b] += 1.0;
    }
  Mat4 rec = Mat4::Zero();
  for (int m = 0; m < 16; ++m)
    rec += (expectations[m] / marg_count[m]) * pauli2()[m];
  return project_density_matrix(rec / 4.0);
}

Chi qpt(const std::function<Mat4(int)>& channel) {
  const QptSystem& sys = qpt_system();
  VecX b(36 * 16);
  for (int i = 0; i < 36; ++i) {
    const Mat4 out = channel(i);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) b(i * 16 + 4 * r + c) = out(r, c);
  }
  const VecX x = sys.solver.solve(b);
  Chi chi;
  for (int m = 0; m < 16; ++m)
    for (int n = 0; n < 16; ++n) chi(m, n) = x(16 * m + n);
  return 0.5 * (chi + Chi(chi.adjoint()));
}

double process_fidelity(const Chi& chi, const Chi& chi_ideal) {
  return (chi.adjoint() * chi_ideal).trace().real();
}

double operator_fidelity(const Mat4& u, const Mat4& v) {
  return std::abs((u.adjoint() * v).trace()) / 4.0;
}

double state_fidelity(const Mat4& rho, const Mat4& rho_ideal) {
  return (rho * rho_ideal).trace().real();
}

}  // namespace czgrape
