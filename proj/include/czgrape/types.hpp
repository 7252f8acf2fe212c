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

#include <complex>
#include <Eigen/Dense>

namespace czgrape {

using complexd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Two coupled qutrits: composite index j = 3*j_A + j_B.
inline constexpr int kDim = 9;
inline constexpr int kLiouvilleDim = kDim * kDim;  // 81

using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;
using Mat4 = Eigen::Matrix4cd;
using Mat5 = Eigen::Matrix<complexd, 5, 5>;
using Mat9 = Eigen::Matrix<complexd, 9, 9>;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;
using MatXd = Eigen::MatrixXd;
using VecXd = Eigen::VectorXd;

}  // namespace czgrape
