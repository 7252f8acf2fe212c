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
#include <string>
#include <vector>

#include "czgrape/device.hpp"

namespace czgrape {

// Discretized Z-control sequence {mu_1 .. mu_M}, zero-order hold with
// segment length tau. Amplitudes in rad/ns, tau in ns.
struct PulseSequence {
  double tau = 0.0;
  std::vector<double> amplitudes;

  int segments() const { return static_cast<int>(amplitudes.size()); }
  double total_time() const { return tau * segments(); }

  void validate() const;
};

struct FlattopParams {
  double gamma = 0.0;  // plateau amplitude, rad/ns
  double T = 0.0;      // duration, ns
  double sigma = 0.0;  // edge width, ns
};

struct PulseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonDivisibleDuration : PulseError {
  using PulseError::PulseError;
};
struct OutOfRange : PulseError {
  using PulseError::PulseError;
};

// Continuous error-function-edged flattop waveform.
double flattop_value(const FlattopParams& params, double t);

// Samples the flattop at segment left edges t = (m-1) tau, m = 1..M.
PulseSequence flattop(const FlattopParams& params, double tau);

// Piecewise-linear interpolation through segment midpoints, clamped to
// the endpoint segment values outside the first/last midpoints.
double interpolate(const PulseSequence& seq, double t);

// Constant pulse at the |11>/|20> resonance amplitude, duration the
// closest multiple of tau to the full swap period pi/(sqrt(2) g).
PulseSequence square_resonant(const DeviceParams& params, double tau);

// Text format: header line "tau_ns=<float>", then one amplitude per
// line in rad/ns (the internal unit; an MHz representation cannot round
// trip bit-exactly through the 2pi*1e-3 conversion). Round trip is
// bit-exact.
std::string serialize_pulse(const PulseSequence& seq);
PulseSequence deserialize_pulse(const std::string& text);
void save_pulse(const PulseSequence& seq, const std::string& path);
PulseSequence load_pulse(const std::string& path);

}  // namespace czgrape
