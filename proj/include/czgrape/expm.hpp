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

#include "czgrape/types.hpp"

namespace czgrape {

struct NonFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exp(scale * A) for a general square complex matrix (Pade scaling and
// squaring). Throws NonFinite on NaN/Inf input.
MatX matrix_exponential(const MatX& a, double scale = 1.0);

// exp(-i * scale * H) for Hermitian H via eigendecomposition; the result
// is unitary to machine precision.
MatX unitary_exponential(const MatX& h, double scale);

}  // namespace czgrape
