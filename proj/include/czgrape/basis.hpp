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

#include <array>

#include "czgrape/types.hpp"

namespace czgrape {

// Composite index for |j_A j_B> in the 9-dim two-qutrit space.
inline constexpr int composite_index(int j_A, int j_B) { return 3 * j_A + j_B; }
inline constexpr int level_A(int j) { return j / 3; }
inline constexpr int level_B(int j) { return j % 3; }

// Ordered computational subspace {|00>, |10>, |01>, |11>}.
inline constexpr std::array<int, 4> kComputational = {
    composite_index(0, 0), composite_index(1, 0),
    composite_index(0, 1), composite_index(1, 1)};

// Extended 5-state set appending |20>.
inline constexpr std::array<int, 5> kFiveState = {
    composite_index(0, 0), composite_index(1, 0), composite_index(0, 1),
    composite_index(1, 1), composite_index(2, 0)};

inline constexpr int kIdx00 = kComputational[0];
inline constexpr int kIdx10 = kComputational[1];
inline constexpr int kIdx01 = kComputational[2];
inline constexpr int kIdx11 = kComputational[3];
inline constexpr int kIdx20 = kFiveState[4];

// Restriction of a 9x9 matrix to the computational subspace, in the
// {|00>, |10>, |01>, |11>} ordering.
inline Mat4 restrict_computational(const Mat9& m) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = m(kComputational[i], kComputational[j]);
  return r;
}

inline Mat5 restrict_five_state(const Mat9& m) {
  Mat5 r;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r(i, j) = m(kFiveState[i], kFiveState[j]);
  return r;
}

// Embeds a 4x4 computational-subspace matrix into the 9-dim space with
// zeros everywhere else.
inline Mat9 embed_computational(const Mat4& m) {
  Mat9 r = Mat9::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(kComputational[i], kComputational[j]) = m(i, j);
  return r;
}

inline Mat9 embed_five_state(const Mat5& m) {
  Mat9 r = Mat9::Zero();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) r(kFiveState[i], kFiveState[j]) = m(i, j);
  return r;
}

// Two-qubit computational state embedded as a 9-dim qutrit ket.
inline VecX embed_state(const Eigen::Vector4cd& psi) {
  VecX v = VecX::Zero(kDim);
  for (int i = 0; i < 4; ++i) v(kComputational[i]) = psi(i);
  return v;
}

}  // namespace czgrape
