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
#include "czgrape/device.hpp"

#include <cmath>

#include "czgrape/units.hpp"

namespace czgrape {

double DeviceParams::swap_period() const {
  return kPi / (std::sqrt(2.0) * g);
}

std::string DeviceParams::validate() const {
  if (!(g > 0.0)) throw DeviceParamError("coupling g must be positive");
  if (!(T1_A > 0.0) || !(T1_B > 0.0)) throw DeviceParamError("T1 times must be positive");
  if (!(Tphi_A > 0.0) || !(Tphi_B > 0.0)) throw DeviceParamError("Tphi times must be positive");
  for (double f : {F0_A, F1_A, F0_B, F1_B}) {
    if (!(f > 0.5 && f <= 1.0))
      throw DeviceParamError("readout fidelities must lie in (0.5, 1]");
  }
  if (std::abs(g) * 10.0 > std::abs(detuning()))
    return "warning: coupling g is not small against |omega_A - omega_B|";
  return "";
}

DeviceParams load_device_params(const Config& cfg, const std::string& prefix) {
  auto key = [&](const char* k) { return prefix.empty() ? std::string(k) : prefix + "." + k; };
  DeviceParams p;
  p.omega_A = mhz_to_radns(cfg.get_double(key("omega_A_MHz")));
  p.omega_B = mhz_to_radns(cfg.get_double(key("omega_B_MHz")));
  p.delta_A = mhz_to_radns(cfg.get_double(key("delta_A_MHz")));
  p.delta_B = mhz_to_radns(cfg.get_double(key("delta_B_MHz")));
  p.g = mhz_to_radns(cfg.get_double(key("g_MHz")));
  p.T1_A = cfg.get_double(key("T1_A_ns"));
  p.T1_B = cfg.get_double(key("T1_B_ns"));
  p.Tphi_A = cfg.get_double(key("Tphi_A_ns"));
  p.Tphi_B = cfg.get_double(key("Tphi_B_ns"));
  p.F0_A = cfg.get_double(key("F0_A"));
  p.F1_A = cfg.get_double(key("F1_A"));
  p.F0_B = cfg.get_double(key("F0_B"));
  p.F1_B = cfg.get_double(key("F1_B"));
  p.validate();
  return p;
}

DeviceParams load_device_params_file(const std::string& path) {
  return load_device_params(Config::load(path));
}

}  // namespace czgrape
