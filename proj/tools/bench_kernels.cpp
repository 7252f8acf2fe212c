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
// Timing comparison of the OpenMP segment-exponential kernels against
// their serial reference implementations.

#include <chrono>
#include <cstdio>
#include <vector>

#include "czgrape/dynamics.hpp"
#include "czgrape/liouville.hpp"
#include "czgrape/units.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace czgrape;

namespace {

DeviceParams paper_device() {
  DeviceParams p;
  p.omega_A = mhz_to_radns(5458.0);
  p.omega_B = mhz_to_radns(4919.0);
  p.delta_A = mhz_to_radns(-242.1);
  p.delta_B = mhz_to_radns(-258.8);
  p.g = mhz_to_radns(9.1);
  p.T1_A = 15300.0;
  p.T1_B = 27900.0;
  p.Tphi_A = 13800.0;
  p.Tphi_B = 42700.0;
  p.F0_A = 0.978;
  p.F1_A = 0.937;
  p.F0_B = 0.952;
  p.F1_B = 0.904;
  return p;
}

template <typename F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  const DeviceParams device = paper_device();
  PulseSequence seq;
  seq.tau = 0.5;
  for (int m = 0; m < 100; ++m)
    seq.amplitudes.push_back(device.resonant_amplitude() * (0.9 + 0.002 * m));

  const auto hams = segment_hamiltonians(seq, device, CouplingModel::Full);
  std::vector<MatX> liouvillians;
  for (const auto& h : hams) liouvillians.push_back(build_liouvillian(h, device, true));

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: disabled at build time\n");
#endif
  std::printf("segments: %d (9x9 unitaries, 81x81 superoperators)\n\n", seq.segments());

  const double u_serial = time_ms([&] { segment_unitaries_serial(hams, seq.tau); }, 20);
  const double u_omp = time_ms([&] { segment_unitaries(hams, seq.tau); }, 20);
  std::printf("segment_unitaries   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
              u_serial, u_omp, u_serial / u_omp);

  const double s_serial =
      time_ms([&] { segment_superops_serial(liouvillians, seq.tau, 1.0); }, 3);
  const double s_omp = time_ms([&] { segment_superops(liouvillians, seq.tau, 1.0); }, 3);
  std::printf("segment_superops    serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
              s_serial, s_omp, s_serial / s_omp);

  // Consistency check while we are at it.
  const auto a = segment_unitaries_serial(hams, seq.tau);
  const auto b = segment_unitaries(hams, seq.tau);
  double dev = 0.0;
  for (size_t m = 0; m < a.size(); ++m) dev = std::max(dev, (a[m] - b[m]).norm());
  std::printf("\nmax serial/parallel deviation: %.3e\n", dev);
  return 0;
}
