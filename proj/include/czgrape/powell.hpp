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

#include <functional>
#include <stdexcept>

#include "czgrape/types.hpp"

namespace czgrape {

// Shared by the model-fitting front ends (chevron, RB decay, gate fit).
struct FitFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PowellOptions {
  int max_sweeps = 200;       // direction-set sweeps
  double ftol = 1e-12;        // relative objective decrease per sweep
  double line_tol = 1e-10;    // Brent line-minimization tolerance
  double initial_step = 0.1;  // bracketing step along each direction
};

struct PowellResult {
  VecXd x;
  double value = 0.0;
  int sweeps = 0;
  bool converged = false;
};

// Powell's conjugate-direction minimization: cycles a direction set with
// Brent 1-D line searches and replaces the direction of largest decrease
// by the net sweep displacement.
PowellResult powell_minimize(const std::function<double(const VecXd&)>& f,
                             const VecXd& x0, const PowellOptions& opts = {});

// Brent line minimization of g on a bracket found by stepping from 0.
double brent_line_minimize(const std::function<double(double)>& g, double step,
                           double tol, double* fmin);

}  // namespace czgrape
