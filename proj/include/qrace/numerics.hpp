// Copyright 2026 The qrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Special functions and quadrature used by the mining model.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "qrace/errors.hpp"

namespace qrace::numerics {

inline constexpr double kInvE = 0.36787944117144232160;  // 1/e

/// Principal branch W0 of the Lambert W function, the inverse of w -> w*e^w
/// restricted to w >= -1.
///
/// Halley iteration from a regional seed (branch-point series, log1p, or the
/// asymptotic log expansion). Within 1e-9 of the branch point -1/e the
/// square-root series is returned directly since Halley stalls where the
/// derivative vanishes.
///
/// Throws std::domain_error for z < -1/e or NaN.
inline double lambert_w0(double z) {
  if (std::isnan(z) || z < -kInvE) {
    throw std::domain_error("lambert_w0: argument " + std::to_string(z) +
                            " is below the branch point -1/e");
  }
  if (z == 0.0) return 0.0;
  if (std::isinf(z)) return z;

  // p = sqrt(2(ez + 1)); e*z + 1 can round slightly negative at z = -1/e.
  auto branch_p = [](double v) {
    const double s = std::numbers::e * v + 1.0;
    return std::sqrt(2.0 * (s > 0.0 ? s : 0.0));
  };

  if (z + kInvE < 1e-9) {
    const double p = branch_p(z);
    return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 +
                  p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
  }

  double w;
  if (z < -0.25) {
    const double p = branch_p(z);
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else if (z < 3.0) {
    w = std::log1p(z);
  } else {
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (!(std::fabs(step) >= 1e-14 * (1.0 + std::fabs(w)))) break;
  }
  return w < -1.0 ? -1.0 : w;
}

/// Tolerances for integrate(). The target is max(abs_tol, rel_tol * |I|).
struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;

  void validate() const {
    if (!(abs_tol > 0.0)) throw InputError("QuadratureSpec: abs_tol must be > 0");
    if (!(rel_tol > 0.0)) throw InputError("QuadratureSpec: rel_tol must be > 0");
    if (max_depth < 1) throw InputError("QuadratureSpec: max_depth must be >= 1");
  }
};

namespace detail {

inline constexpr int kInitialPanels = 16;
inline constexpr std::int64_t kMaxEvaluations = 50'000'000;

template <class F>
struct SimpsonState {
  F& f;
  int max_depth;
  std::int64_t evaluations = 0;

  double eval(double t) {
    if (++evaluations > kMaxEvaluations) {
      throw NumericalError("integrate: evaluation budget exhausted");
    }
    const double v = f(t);
    if (!std::isfinite(v)) {
      throw NumericalError("integrate: integrand is not finite at t = " + std::to_string(t));
    }
    return v;
  }

  double refine(double a, double b, double fa, double fm, double fb, double whole,
                double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    if (depth >= max_depth) {
      throw NumericalError("integrate: max_depth " + std::to_string(max_depth) +
                           " reached before tolerance was met on [" + std::to_string(a) +
                           ", " + std::to_string(b) + "]");
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * eps, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * eps, depth + 1);
  }
};

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b].
///
/// A composite Simpson pass over 16 panels sets the tolerance scale, then each
/// panel is bisected until the Richardson error estimate meets its share of
/// the target. Throws NumericalError when max_depth is reached first.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!(std::isfinite(a) && std::isfinite(b)) || a > b) {
    throw InputError("integrate: require finite a <= b");
  }
  if (a == b) return 0.0;

  detail::SimpsonState<std::remove_reference_t<F>> state{f, spec.max_depth};
  constexpr int n = detail::kInitialPanels;
  const double h = (b - a) / n;

  double nodes[n + 1];
  double mids[n];
  for (int i = 0; i <= n; ++i) nodes[i] = state.eval(i == n ? b : a + i * h);
  for (int i = 0; i < n; ++i) mids[i] = state.eval(a + (i + 0.5) * h);

  double panels[n];
  double coarse = 0.0;
  for (int i = 0; i < n; ++i) {
    panels[i] = h / 6.0 * (nodes[i] + 4.0 * mids[i] + nodes[i + 1]);
    coarse += panels[i];
  }

  const double eps = std::fmax(spec.abs_tol, spec.rel_tol * std::fabs(coarse)) / n;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double lo = a + i * h;
    const double hi = i + 1 == n ? b : a + (i + 1) * h;
    total += state.refine(lo, hi, nodes[i], mids[i], nodes[i + 1], panels[i], eps, 1);
  }
  return total;
}

}  // namespace qrace::numerics
