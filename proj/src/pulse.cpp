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
#include "czgrape/pulse.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "czgrape/units.hpp"

namespace czgrape {

void PulseSequence::validate() const {
  if (amplitudes.empty()) throw PulseError("pulse must have at least one segment");
  if (!(tau > 0.0)) throw PulseError("segment length tau must be positive");
  for (double a : amplitudes)
    if (!std::isfinite(a)) throw PulseError("pulse amplitude is not finite");
}

double flattop_value(const FlattopParams& params, double t) {
  const double c = 4.0 * std::sqrt(std::log(2.0));
  const double inv_sigma = 1.0 / params.sigma;
  return 0.5 * params.gamma *
         (std::erf(c * (t * inv_sigma - 1.0)) -
          std::erf(c * (t * inv_sigma + 1.0 - params.T * inv_sigma)));
}

PulseSequence flattop(const FlattopParams& params, double tau) {
  if (!(params.sigma > 0.0) || !(params.T > 0.0))
    throw PulseError("flattop requires positive duration and edge width");
  const double ratio = params.T / tau;
  const double m_real = std::round(ratio);
  if (std::abs(ratio - m_real) > 1e-9 * ratio || m_real < 1.0)
    throw NonDivisibleDuration("pulse duration is not an integer multiple of tau");
  const int segments = static_cast<int>(m_real);
  PulseSequence seq;
  seq.tau = tau;
  seq.amplitudes.resize(segments);
  for (int m = 0; m < segments; ++m)
    seq.amplitudes[m] = flattop_value(params, m * tau);
  return seq;
}

double interpolate(const PulseSequence& seq, double t) {
  seq.validate();
  const double T = seq.total_time();
  if (t < 0.0 || t > T) throw OutOfRange("interpolation time outside [0, T]");
  const int M = seq.segments();
  // Midpoint of segment m (0-based) is at (m + 1/2) tau.
  const double x = t / seq.tau - 0.5;
  if (x <= 0.0) return seq.amplitudes.front();
  if (x >= M - 1) return seq.amplitudes.back();
  const int m = static_cast<int>(x);
  const double f = x - m;
  return (1.0 - f) * seq.amplitudes[m] + f * seq.amplitudes[m + 1];
}

PulseSequence square_resonant(const DeviceParams& params, double tau) {
  const double T = params.swap_period();
  int segments = static_cast<int>(std::round(T / tau));
  if (segments < 1) segments = 1;
  PulseSequence seq;
  seq.tau = tau;
  seq.amplitudes.assign(segments, params.resonant_amplitude());
  return seq;
}

namespace {

std::string print_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string serialize_pulse(const PulseSequence& seq) {
  seq.validate();
  std::ostringstream out;
  out << "tau_ns=" << print_double(seq.tau) << "\n";
  for (double a : seq.amplitudes) out << print_double(a) << "\n";
  return out.str();
}

PulseSequence deserialize_pulse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("tau_ns=", 0) != 0)
    throw PulseError("pulse file must start with a tau_ns= header");
  PulseSequence seq;
  try {
    seq.tau = std::stod(line.substr(7));
  } catch (const std::exception&) {
    throw PulseError("malformed tau_ns header: " + line);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      seq.amplitudes.push_back(std::stod(line));
    } catch (const std::exception&) {
      throw PulseError("malformed amplitude line: " + line);
    }
  }
  seq.validate();
  return seq;
}

void save_pulse(const PulseSequence& seq, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw PulseError("cannot write pulse file: " + path);
  f << serialize_pulse(seq);
}

PulseSequence load_pulse(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PulseError("cannot open pulse file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return deserialize_pulse(ss.str());
}

}  // namespace czgrape
