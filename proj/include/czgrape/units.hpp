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

#include "czgrape/types.hpp"

// Internal units: angular frequency in rad/ns, time in ns.
// Config files and all user-facing I/O use ordinary frequency in MHz.

namespace czgrape {

inline double mhz_to_radns(double mhz) { return mhz * 1e-3 * kTwoPi; }
inline double radns_to_mhz(double radns) { return radns / (1e-3 * kTwoPi); }
inline double ghz_to_radns(double ghz) { return ghz * kTwoPi; }

}  // namespace czgrape
