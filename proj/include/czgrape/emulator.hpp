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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "czgrape/config.hpp"
#include "czgrape/dynamics.hpp"
#include "czgrape/powell.hpp"
#include "czgrape/tomography.hpp"

namespace czgrape {

// Control-line distortion as an ordered list of stages applied to the
// zero-order-hold pulse re-sampled on a fine internal grid. An empty
// stage list is the exact identity (the pulse is passed through
// untouched, original grid included).
struct DistortionStage {
  enum class Kind { ExponentialFilter, AmplitudeScale };
  Kind kind = Kind::AmplitudeScale;
  double value = 1.0;  // time constant in ns, or scale factor
};

struct DistortionModel {
  std::vector<DistortionStage> stages;
  double fine_tau = 0.05;  // internal grid, ns

  bool is_none() const { return stages.empty(); }
  static DistortionModel none() { return {}; }
};

DistortionModel load_distortion(const Config& cfg, const std::string& section = "distortion");

struct MeasurementConfig {
  bool sampled = false;
  int shots = 3000;
  bool readout_error = false;
  bool readout_correction = true;
  uint64_t seed = 0;
};

struct EmulatorConfig {
  DistortionModel distortion;
  MeasurementConfig measurement;
  bool dissipation = true;
};

struct EmulatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PulseSequence apply_distortion(const PulseSequence& seq, const DistortionModel& model);

// Stand-in for the physical experiment: evolves states under the
// distorted pulse with dissipation, compensates dynamic phases with
// U_d^dag built from the NOMINAL pulse (the systematic mismatch the
// data-driven loop corrects), and measures with optional shot sampling
// and readout corruption.
class LabEmulator {
 public:
  LabEmulator(const DeviceParams& device, const EmulatorConfig& cfg);

  const DeviceParams& device() const { return device_; }
  const EmulatorConfig& config() const { return cfg_; }

  Mat9 run_gate(const PulseSequence& seq, const Mat9& rho0) const;
  Chi measure_qpt(const PulseSequence& seq) const;
  std::vector<Mat4> measure_qst_states(const PulseSequence& seq,
                                       const std::vector<VecX>& states) const;

  // Total channel superoperator (distortion + dissipation + nominal
  // U_d^dag compensation); cached for the last pulse seen.
  const MatX& gate_superoperator(const PulseSequence& seq) const;

 private:
  Mat4 measure_state(const Mat9& rho, uint64_t stream) const;

  DeviceParams device_;
  EmulatorConfig cfg_;
  ReadoutModel readout_;
  mutable PulseSequence cached_pulse_;
  mutable MatX cached_super_;
  mutable bool cache_valid_ = false;
};

// P11(amplitude, time) map of the |11> <-> |20> avoided crossing:
// prepare |11>, hold mu constant, read the |11> population.
Eigen::MatrixXd chevron_scan(const std::vector<double>& amplitudes,
                             const std::vector<double>& times,
                             const DeviceParams& device, bool dissipative);

struct ChevronFit {
  double g = 0.0;          // rad/ns
  double resonance = 0.0;  // resonant amplitude, rad/ns
  double residual = 0.0;   // rms of the fit
};

// Least-squares fit of the generalized Rabi transfer formula; initial
// guesses seed the Powell search. FitFailure on flat data or a residual
// above 0.1.
ChevronFit fit_chevron(const Eigen::MatrixXd& p11, const std::vector<double>& amplitudes,
                       const std::vector<double>& times, double g0, double res0);

}  // namespace czgrape
