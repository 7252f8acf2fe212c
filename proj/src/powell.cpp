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
#include "czgrape/powell.hpp"

#include <cmath>

namespace czgrape {

namespace {

constexpr double kGolden = 1.618033988749895;

struct Bracket {
  double a, b, c;
  double fa, fb, fc;
};

// Downhill bracketing from 0 with an initial step.
Bracket bracket_minimum(const std::function<double(double)>& g, double step) {
  double a = 0.0, fa = g(a);
  double b = step, fb = g(b);
  if (fb > fa) {
    std::swap(a, b);
    std::swap(fa, fb);
  }
  double c = b + kGolden * (b - a), fc = g(c);
  int guard = 0;
  while (fb > fc && guard++ < 200) {
    a = b;
    fa = fb;
    b = c;
    fb = fc;
    c = b + kGolden * (b - a);
    fc = g(c);
  }
  if (a > c) {
    std::swap(a, c);
    std::swap(fa, fc);
  }
  return {a, b, c, fa, fb, fc};
}

}  // namespace

double brent_line_minimize(const std::function<double(double)>& g, double step,
                           double tol, double* fmin) {
  Bracket br = bracket_minimum(g, step);
  double a = br.a, b = br.c;
  double x = br.b, w = br.b, v = br.b;
  double fx = br.fb, fw = fx, fv = fx;
  double d = 0.0, e = 0.0;
  for (int iter = 0; iter < 100; ++iter) {
    const double xm = 0.5 * (a + b);
    const double tol1 = tol * std::abs(x) + 1e-14;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) break;
    bool parabolic = false;
    if (std::abs(e) > tol1) {
      const double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) p = -p;
      q = std::abs(q);
      const double etemp = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) && p < q * (b - x)) {
        parabolic = true;
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = std::copysign(tol1, xm - x);
      }
    }
    if (!parabolic) {
      e = (x >= xm) ? a - x : b - x;
      d = 0.381966011250105 * e;
    }
    const double u = std::abs(d) >= tol1 ? x + d : x + std::copysign(tol1, d);
    const double fu = g(u);
    if (fu <= fx) {
      if (u >= x)
        a = x;
      else
        b = x;
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x)
        a = u;
      else
        b = u;
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  if (fmin) *fmin = fx;
  return x;
}

PowellResult powell_minimize(const std::function<double(const VecXd&)>& f,
                             const VecXd& x0, const PowellOptions& opts) {
  const int n = static_cast<int>(x0.size());
  MatXd directions = MatXd::Identity(n, n);
  PowellResult res;
  res.x = x0;
  res.value = f(x0);
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    res.sweeps = sweep + 1;
    const VecXd x_start = res.x;
    const double f_start = res.value;
    int biggest_dir = 0;
    double biggest_drop = 0.0;
    for (int k = 0; k < n; ++k) {
      const VecXd dir = directions.col(k);
      const double f_before = res.value;
      auto line = [&](double t) { return f(res.x + t * dir); };
      double f_line = 0.0;
      const double t = brent_line_minimize(line, opts.initial_step, opts.line_tol, &f_line);
      if (f_line < res.value) {
        res.x += t * dir;
        res.value = f_line;
      }
      if (f_before - res.value > biggest_drop) {
        biggest_drop = f_before - res.value;
        biggest_dir = k;
      }
    }
    const VecXd net = res.x - x_start;
    if (2.0 * (f_start - res.value) <=
        opts.ftol * (std::abs(f_start) + std::abs(res.value)) + 1e-20) {
      res.converged = true;
      break;
    }
    // Extrapolated-point test before replacing a direction (Powell 1964).
    const double f_extrap = f(x_start + 2.0 * net);
    if (f_extrap < f_start) {
      const double t1 = f_start - res.value - biggest_drop;
      const double t2 = f_start - f_extrap;
      if (2.0 * (f_start - 2.0 * res.value + f_extrap) * t1 * t1 < t2 * t2 * biggest_drop) {
        const double norm = net.norm();
        if (norm > 0.0) {
          directions.col(biggest_dir) = directions.col(n - 1);
          directions.col(n - 1) = net / norm;
          auto line = [&](double t) { return f(res.x + t * directions.col(n - 1)); };
          double f_line = 0.0;
          const double t = brent_line_minimize(line, opts.initial_step, opts.line_tol, &f_line);
          if (f_line < res.value) {
            res.x += t * directions.col(n - 1);
            res.value = f_line;
          }
        }
      }
    }
  }
  return res;
}

}  // namespace czgrape
