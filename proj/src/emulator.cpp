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
#include "czgrape/emulator.hpp"

#include <cmath>

#include "czgrape/liouville.hpp"
#include "czgrape/powell.hpp"
#include "czgrape/system_model.hpp"

namespace czgrape {

namespace {

// kron(u, conj(u)) acting on row-major vectorized matrices:
// rho -> u rho u^dag.
MatX conjugation_superoperator(const Mat9& u) {
  MatX r(kLiouvilleDim, kLiouvilleDim);
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j)
      r.block(kDim * i, kDim * j, kDim, kDim) = u(i, j) * u.conjugate();
  return r;
}

std::mt19937_64 substream(uint64_t seed, uint64_t stream) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

double rabi_p11(double g, double resonance, double mu, double t) {
  const double half_delta = 0.5 * (mu - resonance);
  const double omega2 = half_delta * half_delta + 2.0 * g * g;
  const double s = std::sin(std::sqrt(omega2) * t);
  return 1.0 - (2.0 * g * g / omega2) * s * s;
}

}  // namespace

DistortionModel load_distortion(const Config& cfg, const std::string& section) {
  DistortionModel model;
  model.fine_tau = cfg.get_double(section + ".fine_tau_ns", 0.05);
  const std::string kind = cfg.get_string(section + ".kind", "none");
  auto filter_stage = [&cfg, &section] {
    return DistortionStage{DistortionStage::Kind::ExponentialFilter,
                           cfg.get_double(section + ".time_constant_ns")};
  };
  auto scale_stage = [&cfg, &section] {
    return DistortionStage{DistortionStage::Kind::AmplitudeScale,
                           cfg.get_double(section + ".scale")};
  };
  if (kind == "none") {
  } else if (kind == "exponential-filter") {
    model.stages.push_back(filter_stage());
  } else if (kind == "amplitude-scale") {
    model.stages.push_back(scale_stage());
  } else if (kind == "composite") {
    model.stages.push_back(filter_stage());
    model.stages.push_back(scale_stage());
  } else {
    throw ConfigError("unknown distortion kind '" + kind + "'");
  }
  return model;
}

PulseSequence apply_distortion(const PulseSequence& seq, const DistortionModel& model) {
  seq.validate();
  if (model.is_none()) return seq;
  const double total = seq.total_time();
  const int n = std::max<int>(1, static_cast<int>(std::llround(total / model.fine_tau)));
  const double ft = total / n;
  std::vector<double> u(n);
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) * ft;
    const int seg = std::min(static_cast<int>(t / seq.tau), seq.segments() - 1);
    u[i] = seq.amplitudes[seg];
  }
  for (const auto& stage : model.stages) {
    if (stage.kind == DistortionStage::Kind::AmplitudeScale) {
      for (double& v : u) v *= stage.value;
    } else {
      // Exact first-order response to the piecewise-constant input,
      // sampled at step midpoints (second-order representative for the
      // zero-order-hold re-discretization).
      const double decay_half = std::exp(-0.5 * ft / stage.value);
      const double decay = decay_half * decay_half;
      double y = 0.0;
      for (double& v : u) {
        const double input = v;
        v = y * decay_half + input * (1.0 - decay_half);
        y = y * decay + input * (1.0 - decay);
      }
    }
  }
  PulseSequence out;
  out.tau = ft;
  out.amplitudes = std::move(u);
  return out;
}

LabEmulator::LabEmulator(const DeviceParams& device, const EmulatorConfig& cfg)
    : device_(device), cfg_(cfg) {
  device_.validate();
  readout_ = ReadoutModel::from_device(device_, cfg_.measurement.readout_error,
                                       cfg_.measurement.readout_correction);
}

const MatX& LabEmulator::gate_superoperator(const PulseSequence& seq) const {
  if (cache_valid_ && cached_pulse_.tau == seq.tau &&
      cached_pulse_.amplitudes == seq.amplitudes)
    return cached_super_;
  const PulseSequence actual = apply_distortion(seq, cfg_.distortion);
  const MatX forward = total_superoperator(actual, device_, cfg_.dissipation);
  // Dynamic-phase compensation from the nominal pulse: the experimenter
  // never sees the distorted waveform.
  const auto hams_d = segment_hamiltonians(seq, device_, CouplingModel::Decoupled);
  const auto us = segment_unitaries(hams_d, seq.tau);
  Mat9 u_d = Mat9::Identity();
  for (const auto& u : us) u_d = u * u_d;
  cached_super_ = conjugation_superoperator(u_d.adjoint()) * forward;
  cached_pulse_ = seq;
  cache_valid_ = true;
  return cached_super_;
}

Mat9 LabEmulator::run_gate(const PulseSequence& seq, const Mat9& rho0) const {
  return unvectorize(gate_superoperator(seq) * vectorize(rho0));
}

Mat4 LabEmulator::measure_state(const Mat9& rho, uint64_t stream) const {
  if (!cfg_.measurement.sampled) return qst_exact(rho);
  auto rng = substream(cfg_.measurement.seed, stream);
  return qst_sampled(rho, cfg_.measurement.shots, readout_, rng);
}

Chi LabEmulator::measure_qpt(const PulseSequence& seq) const {
  const MatX& s = gate_superoperator(seq);
  const auto& inputs = state_set_36();
  std::array<Mat4, 36> outputs;
  for (int i = 0; i < 36; ++i)
    outputs[i] = measure_state(unvectorize(s * vectorize(inputs[i])), i);
  return qpt([&outputs](int i) { return outputs[i]; });
}

std::vector<Mat4> LabEmulator::measure_qst_states(const PulseSequence& seq,
                                                  const std::vector<VecX>& states) const {
  const MatX& s = gate_superoperator(seq);
  std::vector<Mat4> out;
  for (size_t i = 0; i < states.size(); ++i) {
    const Mat9 rho0 = states[i] * states[i].adjoint();
    out.push_back(measure_state(unvectorize(s * vectorize(rho0)), 100 + i));
  }
  return out;
}

Eigen::MatrixXd chevron_scan(const std::vector<double>& amplitudes,
                             const std::vector<double>& times,
                             const DeviceParams& device, bool dissipative) {
  Eigen::MatrixXd p11(amplitudes.size(), times.size());
  const Mat9 nA = number_operator_A();
  const Mat9 h0 = build_static_hamiltonian(device);
  const int na = static_cast<int>(amplitudes.size());
#pragma omp parallel for schedule(dynamic)
  for (int ia = 0; ia < na; ++ia) {
    const Mat9 h = h0 + amplitudes[ia] * nA;
    if (!dissipative) {
      Eigen::SelfAdjointEigenSolver<Mat9> es(h);
      const Eigen::Matrix<complexd, kDim, 1> c =
          es.eigenvectors().adjoint().col(kIdx11);
      const Eigen::Matrix<complexd, 1, kDim> row = es.eigenvectors().row(kIdx11);
      for (size_t it = 0; it < times.size(); ++it) {
        complexd amp = 0.0;
        for (int k = 0; k < kDim; ++k)
          amp += row(k) * std::exp(complexd(0.0, -es.eigenvalues()(k) * times[it])) * c(k);
        p11(ia, it) = std::norm(amp);
      }
    } else {
      const MatX l = build_liouvillian(h, device, true);
      Eigen::ComplexEigenSolver<MatX> es(complexd(0.0, -1.0) * l);
      const VecX w = es.eigenvectors().partialPivLu().solve(
          vectorize(Mat9(VecX::Unit(kDim, kIdx11) * VecX::Unit(kDim, kIdx11).adjoint())));
      const int elem = kDim * kIdx11 + kIdx11;
      const Eigen::RowVectorXcd row = es.eigenvectors().row(elem);
      for (size_t it = 0; it < times.size(); ++it) {
        complexd v = 0.0;
        for (int k = 0; k < kLiouvilleDim; ++k)
          v += row(k) * std::exp(es.eigenvalues()(k) * times[it]) * w(k);
        p11(ia, it) = v.real();
      }
    }
  }
  return p11;
}

ChevronFit fit_chevron(const Eigen::MatrixXd& p11, const std::vector<double>& amplitudes,
                       const std::vector<double>& times, double g0, double res0) {
  if (p11.rows() != static_cast<Eigen::Index>(amplitudes.size()) ||
      p11.cols() != static_cast<Eigen::Index>(times.size()))
    throw EmulatorError("fit_chevron: grid shape mismatch");
  if (p11.maxCoeff() - p11.minCoeff() < 0.05)
    throw FitFailure("fit_chevron: no visible transfer signal");
  auto objective = [&](const VecXd& x) {
    const double g = x(0), res = x(1);
    double sum = 0.0;
    for (size_t ia = 0; ia < amplitudes.size(); ++ia)
      for (size_t it = 0; it < times.size(); ++it) {
        const double d = rabi_p11(g, res, amplitudes[ia], times[it]) - p11(ia, it);
        sum += d * d;
      }
    return sum;
  };
  VecXd x0(2);
  x0 << g0, res0;
  PowellOptions opts;
  opts.initial_step = 0.2 * std::abs(g0);
  const PowellResult res = powell_minimize(objective, x0, opts);
  ChevronFit fit;
  fit.g = std::abs(res.x(0));
  fit.resonance = res.x(1);
  fit.residual = std::sqrt(res.value / (amplitudes.size() * times.size()));
  if (fit.residual > 0.1) throw FitFailure("fit_chevron: residual above threshold");
  return fit;
}

}  // namespace czgrape
