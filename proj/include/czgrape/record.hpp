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

#include <string>
#include <vector>

#include "czgrape/emulator.hpp"
#include "czgrape/grape.hpp"

namespace czgrape {

struct RecordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a over the flattened key/value pairs; embedded in every artifact
// so runs can be traced back to their configuration.
std::string config_hash(const Config& cfg);

// One JSON file per run: optimizer config, device parameters, emulator
// settings, and every iteration record (chi and rho artifacts as nested
// [re, im] arrays).
void save_trajectory(const std::string& path, const OptimizerConfig& config,
                     const DeviceParams& device, const EmulatorConfig& emulator,
                     const std::vector<IterationRecord>& records,
                     const std::string& hash);

struct LoadedTrajectory {
  OptimizerConfig config;
  DeviceParams device;
  EmulatorConfig emulator;
  std::vector<IterationRecord> records;
  std::string hash;
};

LoadedTrajectory load_trajectory(const std::string& path);

// CSV companion: step, F_chi, F_Uexp, F_rho_1..4, grad_norm.
void save_fidelity_csv(const std::string& path, const std::vector<IterationRecord>& records);

void save_chi_json(const std::string& path, const Chi& chi, const std::string& hash);

// Re-measures every recorded pulse on a fresh emulator built from the
// stored device/emulator settings and reports the largest deviation
// from the recorded fidelities.
struct ReplayResult {
  double max_dev_chi = 0.0;
  double max_dev_rho = 0.0;
};

ReplayResult replay_trajectory(const LoadedTrajectory& traj);

}  // namespace czgrape
