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
#include "czgrape/rb.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <random>

#include "czgrape/basis.hpp"

namespace czgrape {

namespace {

constexpr int kGroupOrder = 11520;

Mat2 hadamard2() {
  Mat2 h;
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

Mat2 phase2() {
  Mat2 s;
  s << 1.0, 0.0, 0.0, complexd(0.0, 1.0);
  return s;
}

// 4x4 in the {|00>,|10>,|01>,|11>} ordering: qubit A occupies the low
// bit, so A-gates kron on the right.
Mat4 one_qubit_gate_4(const Mat2& u, bool on_A) {
  Mat4 r;
  const Mat2 id = Mat2::Identity();
  const Mat2& outer = on_A ? id : u;
  const Mat2& inner = on_A ? u : id;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.block<2, 2>(2 * i, 2 * j) = outer(i, j) * inner;
  return r;
}

Mat4 cz4() {
  Mat4 c = Mat4::Identity();
  c(3, 3) = -1.0;
  return c;
}

const std::array<Mat4, 5>& generator_table_4() {
  static const std::array<Mat4, 5> t = {
      one_qubit_gate_4(hadamard2(), true), one_qubit_gate_4(phase2(), true),
      one_qubit_gate_4(hadamard2(), false), one_qubit_gate_4(phase2(), false), cz4()};
  return t;
}

// Single-qubit generator lifted to the two-qutrit space, identity on
// level 2.
Mat9 one_qubit_gate_9(const Mat2& u, bool on_A) {
  Mat3 u3 = Mat3::Identity();
  u3.block<2, 2>(0, 0) = u;
  const Mat3 id = Mat3::Identity();
  const Mat3& a = on_A ? u3 : id;
  const Mat3& b = on_A ? id : u3;
  Mat9 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.block<3, 3>(3 * i, 3 * j) = a(i, j) * b;
  return r;
}

const std::array<Mat9, 4>& generator_table_9() {
  static const std::array<Mat9, 4> t = {
      one_qubit_gate_9(hadamard2(), true), one_qubit_gate_9(phase2(), true),
      one_qubit_gate_9(hadamard2(), false), one_qubit_gate_9(phase2(), false)};
  return t;
}

// Phase-invariant key: rotate the first entry of magnitude > 1e-3 to the
// positive real axis, round to 1e-6, print. Clifford entries live on a
// small discrete set, so the rounding is stable.
std::string canonical_key(const Mat4& u) {
  complexd phase(1.0, 0.0);
  for (int i = 0; i < 16; ++i) {
    const complexd z = u(i / 4, i % 4);
    if (std::abs(z) > 1e-3) {
      phase = z / std::abs(z);
      break;
    }
  }
  std::string key;
  key.reserve(16 * 22);
  char buf[32];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const complexd z = u(i, j) / phase;
      // Round to the 1e-6 grid first so -1e-17 cannot print as "-0.000000".
      const double re = std::round(z.real() * 1e6) / 1e6 + 0.0;
      const double im = std::round(z.imag() * 1e6) / 1e6 + 0.0;
      std::snprintf(buf, sizeof(buf), "%.6f,%.6f;", re, im);
      key += buf;
    }
  return key;
}

std::mt19937_64 substream(uint64_t seed, uint64_t a, uint64_t b, uint64_t c) {
  std::seed_seq seq{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32),
                    static_cast<uint32_t>(a), static_cast<uint32_t>(b),
                    static_cast<uint32_t>(c)};
  return std::mt19937_64(seq);
}

}  // namespace

CliffordGroup2Q::CliffordGroup2Q() {
  const auto& gens = generator_table_4();
  elements_.reserve(kGroupOrder);
  elements_.push_back(Mat4::Identity());
  words_.push_back({});
  index_.emplace(canonical_key(elements_[0]), 0);
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (int g = 0; g < 5; ++g) {
      const Mat4 next = gens[g] * elements_[cur];
      const std::string key = canonical_key(next);
      if (index_.count(key)) continue;
      const int idx = static_cast<int>(elements_.size());
      index_.emplace(key, idx);
      elements_.push_back(next);
      auto word = words_[cur];
      word.push_back(static_cast<CliffordGen>(g));
      words_.push_back(std::move(word));
      queue.push_back(idx);
    }
  }
  if (size() != kGroupOrder)
    throw ClosureFailure("Clifford closure produced " + std::to_string(size()) +
                         " elements, expected " + std::to_string(kGroupOrder));
}

const CliffordGroup2Q& CliffordGroup2Q::instance() {
  static const CliffordGroup2Q group;
  return group;
}

int CliffordGroup2Q::index_of(const Mat4& u) const {
  const auto it = index_.find(canonical_key(u));
  if (it == index_.end()) throw RbError("matrix is not a Clifford group element");
  return it->second;
}

int CliffordGroup2Q::inverse_index(int idx) const {
  return index_of(Mat4(elements_[idx].adjoint()));
}

GateChannel ideal_cz_channel() {
  return [](const Mat9& rho) {
    Mat9 out = rho;
    out.row(kIdx11) *= -1.0;
    out.col(kIdx11) *= -1.0;
    return out;
  };
}

GateChannel depolarizing_cz_channel(double fidelity) {
  // Average gate fidelity F = 1 - (3/4)(1 - s) for depolarizing
  // parameter s on d = 4.
  const double s = 1.0 - (4.0 / 3.0) * (1.0 - fidelity);
  const GateChannel ideal = ideal_cz_channel();
  return [s, ideal](const Mat9& rho) {
    Mat9 out = ideal(rho);
    const Mat4 comp = restrict_computational(out);
    const Mat4 mixed =
        s * comp + (1.0 - s) * comp.trace() * Mat4::Identity() / 4.0;
    return Mat9(out + embed_computational(Mat4(mixed - comp)));
  };
}

RbCurve fit_decay(const std::vector<int>& lengths, const std::vector<double>& means) {
  if (lengths.size() != means.size() || lengths.empty())
    throw RbError("fit_decay: length/mean size mismatch");
  double lo = means[0], hi = means[0];
  for (double m : means) {
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  RbCurve curve;
  if (hi - lo < 1e-6) {
    curve.a = 0.0;
    curve.p = 1.0;
    curve.b = means[0];
    curve.degenerate = true;
    return curve;
  }
  if (lengths.size() < 3)
    throw FitFailure("fit_decay: need at least 3 sequence lengths");
  auto objective = [&](const VecXd& x) {
    const double a = x(0), p = x(1), b = x(2);
    if (p <= 1e-6 || p > 1.2) return 1e3 + p * p;
    double sum = 0.0;
    for (size_t i = 0; i < lengths.size(); ++i) {
      const double d = a * std::pow(p, lengths[i]) + b - means[i];
      sum += d * d;
    }
    return sum;
  };
  VecXd x0(3);
  x0 << means.front() - means.back(), 0.98, means.back();
  PowellOptions opts;
  opts.initial_step = 0.02;
  const PowellResult res = powell_minimize(objective, x0, opts);
  curve.a = res.x(0);
  curve.p = res.x(1);
  curve.b = res.x(2);
  if (!(curve.p > 0.0 && curve.p <= 1.001))
    throw FitFailure("fit_decay: decay parameter outside (0, 1]");
  curve.p = std::min(curve.p, 1.0);
  return curve;
}

RbRunResult run_rb(const GateChannel& cz_impl, const RbConfig& cfg) {
  if (cfg.lengths.empty() || cfg.sequences_per_length < 1)
    throw RbError("run_rb: need at least one length and one sequence");
  const CliffordGroup2Q& group = CliffordGroup2Q::instance();
  const auto& gen9 = generator_table_9();
  const Mat4 cz = cz4();

  auto apply_word = [&](Mat9& rho, const std::vector<CliffordGen>& word) {
    for (CliffordGen g : word) {
      if (g == CliffordGen::CZ) {
        rho = cz_impl(rho);
      } else {
        const Mat9& u = gen9[static_cast<int>(g)];
        rho = u * rho * u.adjoint();
      }
    }
  };

  RbRunResult result;
  result.lengths = cfg.lengths;
  for (int interleaved = 0; interleaved < 2; ++interleaved) {
    RbCurve& curve = interleaved ? result.interleaved : result.reference;
    for (size_t li = 0; li < cfg.lengths.size(); ++li) {
      const int n = cfg.lengths[li];
      double sum = 0.0, sum2 = 0.0;
      for (int s = 0; s < cfg.sequences_per_length; ++s) {
        auto rng = substream(cfg.seed, interleaved, li, s);
        std::uniform_int_distribution<int> pick(0, group.size() - 1);
        Mat9 rho = Mat9::Zero();
        rho(kIdx00, kIdx00) = 1.0;
        Mat4 product = Mat4::Identity();
        for (int i = 0; i < n; ++i) {
          const int idx = pick(rng);
          apply_word(rho, group.decomposition(idx));
          product = group.unitary(idx) * product;
          if (interleaved) {
            rho = cz_impl(rho);
            product = cz * product;
          }
        }
        const int recovery = group.inverse_index(group.index_of(product));
        apply_word(rho, group.decomposition(recovery));
        const double p00 = rho(kIdx00, kIdx00).real();
        sum += p00;
        sum2 += p00 * p00;
      }
      const double mean = sum / cfg.sequences_per_length;
      const double var = std::max(0.0, sum2 / cfg.sequences_per_length - mean * mean);
      curve.mean.push_back(mean);
      curve.stddev.push_back(std::sqrt(var));
    }
    const RbCurve fit = fit_decay(cfg.lengths, curve.mean);
    curve.a = fit.a;
    curve.p = fit.p;
    curve.b = fit.b;
    curve.degenerate = fit.degenerate;
  }
  return result;
}

double rb_fidelity(const RbRunResult& result) {
  if (result.reference.mean.empty() || result.interleaved.mean.empty())
    throw MissingFit("rb_fidelity: both decay fits are required");
  if (!(result.reference.p > 0.0)) throw MissingFit("rb_fidelity: p_ref must be positive");
  return 1.0 - 0.75 * (1.0 - result.interleaved.p / result.reference.p);
}

}  // namespace czgrape
