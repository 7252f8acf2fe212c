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
#include <string>
#include <unordered_map>
#include <vector>

#include "czgrape/powell.hpp"
#include "czgrape/types.hpp"

namespace czgrape {

struct RbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ClosureFailure : RbError {
  using RbError::RbError;
};
struct MissingFit : RbError {
  using RbError::RbError;
};

// Generator alphabet of the Clifford closure; also the decomposition
// alphabet of every stored element.
enum class CliffordGen : uint8_t { H_A, S_A, H_B, S_B, CZ };

// The 11520 two-qubit Cliffords up to global phase, built by breadth-
// first closure so every stored decomposition is shortest-found.
class CliffordGroup2Q {
 public:
  static const CliffordGroup2Q& instance();  // built once, shared

  int size() const { return static_cast<int>(elements_.size()); }
  const Mat4& unitary(int idx) const { return elements_[idx]; }
  const std::vector<CliffordGen>& decomposition(int idx) const { return words_[idx]; }

  // Index of the group element equal to u up to global phase.
  int index_of(const Mat4& u) const;  // RbError if absent
  int inverse_index(int idx) const;

 private:
  CliffordGroup2Q();

  std::vector<Mat4> elements_;
  std::vector<std::vector<CliffordGen>> words_;
  std::unordered_map<std::string, int> index_;
};

// CZ as a channel on 9-dim density matrices: the emulated pulse, the
// ideal unitary, or an injected noise model.
using GateChannel = std::function<Mat9(const Mat9&)>;

GateChannel ideal_cz_channel();
// Ideal CZ followed by two-qubit depolarizing noise of the given average
// gate fidelity, acting on the computational subspace.
GateChannel depolarizing_cz_channel(double fidelity);

struct RbConfig {
  std::vector<int> lengths = {1, 3, 7, 15, 31, 63};
  int sequences_per_length = 30;
  uint64_t seed = 0;
};

struct RbCurve {
  std::vector<double> mean, stddev;  // per length
  double a = 0.0, p = 1.0, b = 0.0;
  bool degenerate = false;  // flat data, p = 1 by convention
};

struct RbRunResult {
  std::vector<int> lengths;
  RbCurve reference, interleaved;
};

// f(n) = a p^n + b least-squares fit; flat data returns p = 1 with the
// degenerate flag, non-flat data with fewer than 3 lengths throws
// FitFailure.
RbCurve fit_decay(const std::vector<int>& lengths, const std::vector<double>& means);

// Reference + interleaved randomized benchmarking on exact density
// matrices. Non-CZ generators are applied as exact unitaries; every CZ
// (inside Clifford decompositions and as the interleaved gate) goes
// through cz_impl.
RbRunResult run_rb(const GateChannel& cz_impl, const RbConfig& cfg);

// F(RB) = 1 - (3/4)(1 - p_CZ / p_ref).
double rb_fidelity(const RbRunResult& result);

}  // namespace czgrape
