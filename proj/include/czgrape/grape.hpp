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
#include <functional>
#include <stdexcept>
#include <vector>

#include "czgrape/dynamics.hpp"
#include "czgrape/gate_fit.hpp"
#include "czgrape/tomography.hpp"

namespace czgrape {

// Objective gradient per segment, units 1/(rad/ns).
using GradientSequence = VecXd;

struct GrapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionMismatch : GrapeError {
  using GrapeError::GrapeError;
};
struct NonRealGradient : GrapeError {
  using GrapeError::GrapeError;
};
struct LengthMismatch : GrapeError {
  using GrapeError::GrapeError;
};
struct InvalidConfig : GrapeError {
  using GrapeError::GrapeError;
};

enum class Protocol { I, II };

struct OptimizerConfig {
  Protocol protocol = Protocol::I;
  double alpha = 0.03;  // learning rate, user units (GHz^2)
  int max_steps = 5;
  double grad_norm_tol = 1e-4;
  double pulse_change_tol = 0.0;  // disabled when <= 0
  double fidelity_target = 0.0;   // disabled when <= 0
  bool descent = true;            // mu - alpha k; false flips to the paper's literal "+"
  bool average_pulses = true;     // protocol II: average updated pulses, not gradients
  bool dissipative_model = true;  // protocol-II gradient chain carries the Lindblad terms
  std::vector<VecX> input_states;  // protocol II, 9-dim kets; empty = the four phi states
  uint64_t seed = 0;

  void validate() const;  // throws InvalidConfig
};

struct IterationRecord {
  int step = 0;
  PulseSequence pulse;
  GradientSequence gradient;
  double grad_norm = 0.0;
  double F_chi = -1.0;   // negative = not measured this step
  double F_Uexp = -1.0;
  std::vector<double> F_rho;
  bool has_chi = false;
  Chi chi = Chi::Zero();
  std::vector<Mat4> rho_exp;
  double wall_seconds = 0.0;
  uint64_t seed = 0;
};

// Measurement closures the optimization loop drives. Protocol I needs
// measure_chi; protocol II needs measure_states (density matrices for
// the configured input states, in order) and uses measure_chi per step
// only if it is set.
struct ExperimentProvider {
  std::function<Chi(const PulseSequence&)> measure_chi;
  std::function<std::vector<Mat4>(const PulseSequence&)> measure_states;
};

struct ProviderFailure : GrapeError {
  ProviderFailure(const std::string& what, std::vector<IterationRecord> partial)
      : GrapeError(what), trajectory(std::move(partial)) {}
  std::vector<IterationRecord> trajectory;
};

// Learning-rate unit conversion: user-facing alpha is quoted in GHz^2,
// amplitudes internally in rad/ns.
double alpha_to_internal(double alpha_user);

// Measured 4x4 gate embedded for the five-state trace: zero-padded with
// the fitted computational block and the fixed -1 phase at |20>.
Mat9 embed_gate_operator(const Mat4& u);

// The four phi input states of the second protocol, as 9-dim kets:
// (|0> +- |1>)(x)(|0> +- i|1>)/2 and (|0> +- i|1>)(x)(|0> +- |1>)/2.
std::vector<VecX> default_input_states();

// Ideal CZ output density matrix for a computational input ket.
Mat9 ideal_output_state(const VecX& psi);

// k_{U;m} = -2 tau Im Tr{U_CZ U_exp Q_{c;m}} - 2 tau Im Tr{U_CZ U_exp^dag Q_{d;m}},
// Q_{x;m} = R_{x;m}^dag n_A R_{x;m}; the zero-padded U_CZ embedding
// restricts the traces to the five-state set.
GradientSequence gradient_protocol_I(const PropagatorChain& chain, const Mat9& u_exp);

// k_{rho;m} = 2 i tau [rho_ideal^dag Q_{c;m} vec(rho_exp) - rho_ideal^dag Q_{d;m} vec(rho_exp)]
// with the Liouville-space partial products of the chain. Throws
// NonRealGradient if the imaginary residue exceeds 1e-9.
GradientSequence gradient_protocol_II(const SuperoperatorChain& chain,
                                      const Mat9& rho_exp_T, const Mat9& rho_ideal);

PulseSequence update_pulse(const PulseSequence& seq, const GradientSequence& k,
                           double alpha_internal, bool descent = true);

// Closed measure -> gradient -> update loop. Returns max_steps+1 records
// (the last one measured but not updated) unless a stop criterion fires
// earlier. Provider exceptions resurface as ProviderFailure carrying the
// partial trajectory.
std::vector<IterationRecord> run_optimization(const OptimizerConfig& config,
                                              const DeviceParams& device,
                                              const ExperimentProvider& provider,
                                              const PulseSequence& initial);

}  // namespace czgrape
