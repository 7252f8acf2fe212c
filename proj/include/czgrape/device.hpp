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

#include "czgrape/config.hpp"
#include "czgrape/types.hpp"

namespace czgrape {

// Physical constants of the two-qutrit device. Angular frequencies in
// rad/ns, times in ns, readout fidelities dimensionless.
struct DeviceParams {
  double omega_A = 0.0;
  double omega_B = 0.0;
  double delta_A = 0.0;
  double delta_B = 0.0;
  double g = 0.0;
  double T1_A = 0.0;
  double T1_B = 0.0;
  double Tphi_A = 0.0;
  double Tphi_B = 0.0;
  double F0_A = 1.0;
  double F1_A = 1.0;
  double F0_B = 1.0;
  double F1_B = 1.0;

  double detuning() const { return omega_A - omega_B; }

  // Amplitude that brings |11> and |20> into resonance: -(delta_omega + delta_A).
  double resonant_amplitude() const { return -(detuning() + delta_A); }

  // Full |11><->|20> Rabi period pi/(sqrt(2) g), ns.
  double swap_period() const;

  // Throws DeviceParamError on hard violations; returns a warning string
  // (possibly empty) for soft ones such as g not << |omega_A - omega_B|.
  std::string validate() const;
};

struct DeviceParamError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reads the flat MHz/ns key set of the bundled device files.
DeviceParams load_device_params(const Config& cfg, const std::string& prefix = "");
DeviceParams load_device_params_file(const std::string& path);

}  // namespace czgrape
