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

// Race model between a Grover-search quantum miner and the classical network:
// transition probabilities of the absorbing chain, success probability (exact
// and small-power approximations), regime diagnostics and the optimal
// measurement schedule.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>

#include "qrace/errors.hpp"
#include "qrace/numerics.hpp"

namespace qrace {

enum class Mode { peaceful, aggressive };
enum class Method { exact, approx };
enum class Objective { approx_p14, exact_p14 };

inline constexpr double kBitcoinBlockRate = 1.0 / 600.0;  // blocks per second

inline std::string_view to_string(Mode m) { return m == Mode::peaceful ? "peaceful" : "aggressive"; }
inline std::string_view to_string(Method m) { return m == Method::exact ? "exact" : "approx"; }
inline std::string_view to_string(Objective o) {
  return o == Objective::approx_p14 ? "approx_p14" : "exact_p14";
}

/// Physical and protocol parameters of one quantum-vs-classical race.
/// Rates are per second.
struct MiningParams {
  double difficulty = 1.0;                       // D, expected hashes per block
  std::int64_t registers = 1;                    // m parallel Grover registers
  double grover_rate = 1.0;                      // r, iterations/s per register
  double classical_rate = kBitcoinBlockRate;     // λ, classical blocks/s
  double network_rate = kBitcoinBlockRate;       // λ0, whole-network blocks/s
  std::int64_t iterations = 0;                   // K before scheduled measurement
  double tie_win_prob = 0.0;                     // γ, forks resolved for quantum
  Mode mode = Mode::peaceful;

  void validate() const {
    auto fail = [](const std::string& msg) { throw InputError("invalid parameters: " + msg); };
    if (!(difficulty >= 1.0) || !std::isfinite(difficulty)) fail("difficulty must be finite and >= 1");
    if (registers < 1) fail("registers must be >= 1");
    if (!(grover_rate > 0.0) || !std::isfinite(grover_rate)) fail("grover_rate must be finite and > 0");
    if (!(classical_rate > 0.0) || !std::isfinite(classical_rate)) fail("lambda must be finite and > 0");
    if (!(network_rate > 0.0) || !std::isfinite(network_rate)) fail("network lambda must be finite and > 0");
    if (iterations < 0) fail("k must be >= 0");
    if (!(tie_win_prob >= 0.0 && tie_win_prob <= 1.0)) fail("gamma must lie in [0, 1]");
  }

  double measure_time() const { return static_cast<double>(iterations) / grover_rate; }
  double theta() const { return std::asin(1.0 / std::sqrt(difficulty)); }
  double power_x() const {
    return 4.0 * static_cast<double>(registers) * grover_rate * grover_rate /
           (classical_rate * classical_rate * difficulty);
  }
  double time_y() const { return classical_rate * static_cast<double>(iterations) / grover_rate; }
};

/// An approximation clamped into [0, 1]; `clamped` is set when the raw value
/// left the interval, i.e. the small-power assumption does not hold.
struct Clamped {
  double value = 0.0;
  bool clamped = false;
};

inline Clamped clamp_probability(double raw) {
  if (raw > 1.0) return {1.0, true};
  if (raw < 0.0) return {0.0, true};
  return {raw, false};
}

namespace detail {

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// 1 - (1 - p)^m without cancellation for small p.
inline double any_of(double p, std::int64_t m) {
  if (p >= 1.0) return 1.0;
  if (m == 1) return p;
  return clamp01(-std::expm1(static_cast<double>(m) * std::log1p(-p)));
}

inline void require_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError(std::string(name) + " must lie in [0, 1]");
  }
}

// ∫_0^c e^{-s} s^2 ds = 2 - e^{-c}(c^2 + 2c + 2), series below c = 0.5.
inline double truncated_second_moment(double c) {
  if (c < 0.5) {
    double sum = 0.0;
    double pow_fact = c * c * c;  // c^{n+3} / n!
    for (int n = 0; n < 30; ++n) {
      const double term = pow_fact / (n + 3);
      sum += (n % 2 == 0) ? term : -term;
      pow_fact *= c / (n + 1);
      if (pow_fact < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
  }
  return 2.0 - std::exp(-c) * (c * (c + 2.0) + 2.0);
}

}  // namespace detail

/// Success probability of one register measured after k Grover iterations
/// when 1 in D items is marked: sin^2((2k + 1) asin(1/sqrt(D))). Accepts a
/// real k so the continuous schedule rt can be evaluated.
inline double grover_single_success(double k, double difficulty) {
  if (!(difficulty >= 1.0)) throw InputError("grover_single_success: difficulty must be >= 1");
  if (!(k >= 0.0)) throw InputError("grover_single_success: k must be >= 0");
  const double theta = std::asin(1.0 / std::sqrt(difficulty));
  const double s = std::sin(2.0 * (k + 0.5) * theta);
  return detail::clamp01(s * s);
}

/// ν: at least one of m registers yields a marked header at T = K/r.
inline double nu_exact(const MiningParams& p) {
  return detail::any_of(grover_single_success(static_cast<double>(p.iterations), p.difficulty),
                        p.registers);
}

/// ν̃ = 4mK²/D.
inline Clamped nu_approx(const MiningParams& p) {
  const double k = static_cast<double>(p.iterations);
  return clamp_probability(4.0 * static_cast<double>(p.registers) * k * k / p.difficulty);
}

/// μ = 1 - e^{-λK/r}: a classical block arrives before T.
inline double mu(const MiningParams& p) { return detail::clamp01(-std::expm1(-p.time_y())); }

/// q(t): success of an immediate measurement after t seconds of iterating,
/// using the continuous iteration count rt.
inline double q_of_t(double t, const MiningParams& p) {
  if (!(t >= 0.0)) throw InputError("q_of_t: t must be >= 0");
  return detail::any_of(grover_single_success(p.grover_rate * t, p.difficulty), p.registers);
}

/// q(t) with the iteration count truncated to floor(rt).
inline double q_of_t_floor(double t, const MiningParams& p) {
  if (!(t >= 0.0)) throw InputError("q_of_t_floor: t must be >= 0");
  return detail::any_of(grover_single_success(std::floor(p.grover_rate * t), p.difficulty),
                        p.registers);
}

/// Quadrature tolerances for φ. The integrand scales like 4mK²/D, so only a
/// relative target is meaningful.
inline constexpr numerics::QuadratureSpec kPhiQuadrature{std::numeric_limits<double>::min(), 1e-10,
                                                         60};

/// Expected q(t) under the classical arrival time conditioned on t < T:
/// ∫_0^T λ e^{-λt} q(t) dt / (1 - e^{-λT}).
template <class Q>
double conditioned_measurement_success(Q&& q, double lambda, double horizon,
                                       const numerics::QuadratureSpec& spec = kPhiQuadrature) {
  if (!(lambda > 0.0) || !(horizon > 0.0)) {
    throw InputError("conditioned_measurement_success: lambda and horizon must be > 0");
  }
  const double mass = -std::expm1(-lambda * horizon);
  const double integral = numerics::integrate(
      [&](double t) { return lambda * std::exp(-lambda * t) * q(t); }, 0.0, horizon, spec);
  return detail::clamp01(integral / mass);
}

/// φ: aggressive measurement succeeds given the classical block came first.
inline double phi_exact(const MiningParams& p,
                        const numerics::QuadratureSpec& spec = kPhiQuadrature) {
  if (p.mode != Mode::aggressive) throw InputError("phi_exact: requires aggressive mode");
  if (p.iterations < 1) throw InputError("phi_exact: requires k >= 1");
  return conditioned_measurement_success([&](double t) { return q_of_t(t, p); },
                                         p.classical_rate, p.measure_time(), spec);
}

/// φ̃: closed form of the same integral with q(t) ≈ 4m(rt)²/D.
inline Clamped phi_approx(const MiningParams& p) {
  if (p.mode != Mode::aggressive) throw InputError("phi_approx: requires aggressive mode");
  if (p.iterations < 1) throw InputError("phi_approx: requires k >= 1");
  const double lambda = p.classical_rate;
  const double c = lambda * p.measure_time();
  const double scale = 4.0 * static_cast<double>(p.registers) * p.grover_rate * p.grover_rate /
                       (p.difficulty * lambda * lambda);
  return clamp_probability(scale * detail::truncated_second_moment(c) / -std::expm1(-c));
}

/// Absorption probability into state 4 (scheduled measurement wins).
/// Returns 0 when ν = μ = 0: the chain cycles 1 -> 3 -> 1 forever.
inline double p14(double nu, double mu) {
  detail::require_probability(nu, "nu");
  detail::require_probability(mu, "mu");
  const double denom = nu + mu * (1.0 - nu);  // 1 - (1-μ)(1-ν)
  if (denom == 0.0) return 0.0;
  return detail::clamp01(nu * (1.0 - mu) / denom);
}

/// Absorption probability into state 8 (aggressive fork won).
inline double p18(double nu, double mu, double phi, double gamma) {
  detail::require_probability(phi, "phi");
  detail::require_probability(gamma, "gamma");
  return detail::clamp01((1.0 - p14(nu, mu)) * phi * gamma);
}

struct TransitionProbabilities {
  double nu = 0.0;
  double mu = 0.0;
  double phi = 0.0;
  double gamma = 0.0;
  Method method = Method::exact;
  bool clamped = false;
};

struct SuccessBreakdown {
  double p14 = 0.0;
  double p18 = 0.0;
  double total = 0.0;
  Method method = Method::exact;
  bool clamped = false;
};

inline TransitionProbabilities transition_probabilities(const MiningParams& p, Method method) {
  p.validate();
  TransitionProbabilities tp;
  tp.method = method;
  tp.mu = mu(p);
  tp.gamma = p.tie_win_prob;
  if (method == Method::exact) {
    tp.nu = nu_exact(p);
  } else {
    const Clamped nu = nu_approx(p);
    tp.nu = nu.value;
    tp.clamped = nu.clamped;
  }
  if (p.mode == Mode::aggressive) {
    if (method == Method::exact) {
      tp.phi = phi_exact(p);
    } else {
      const Clamped phi = phi_approx(p);
      tp.phi = phi.value;
      tp.clamped = tp.clamped || phi.clamped;
    }
  }
  return tp;
}

inline SuccessBreakdown success_probability(const TransitionProbabilities& tp) {
  SuccessBreakdown s;
  s.method = tp.method;
  s.clamped = tp.clamped;
  s.p14 = p14(tp.nu, tp.mu);
  s.p18 = p18(tp.nu, tp.mu, tp.phi, tp.gamma);
  s.total = s.p14 + s.p18;
  return s;
}

/// P = p14 + p18 at the caller's K.
inline SuccessBreakdown success_probability(const MiningParams& p, Method method) {
  return success_probability(transition_probabilities(p, method));
}

/// p̃14 in the dimensionless variables x = 4mr²/(λ²D), y = λK/r.
inline double p14_tilde_xy(double x, double y) {
  if (!(x >= 0.0)) throw InputError("p14_tilde_xy: x must be >= 0");
  if (!(y > 0.0)) throw InputError("p14_tilde_xy: y must be > 0");
  if (std::isinf(x)) return 1.0;
  const double xy2 = x * y * y;
  return xy2 / (std::expm1(y) + xy2);
}

/// y0 = W0(-2/e²) + 2, the maximiser of p̃14 in y for every x.
inline double optimal_y0() {
  static const double y0 = numerics::lambert_w0(-2.0 * std::exp(-2.0)) + 2.0;
  return y0;
}

/// a = (e^{y0} - 1)/y0², so that p̃14(x, y0) = x/(a + x).
inline double optimum_constant_a() {
  const double y0 = optimal_y0();
  return std::expm1(y0) / (y0 * y0);
}

struct OptimalKResult {
  Objective objective = Objective::approx_p14;
  double y0 = 0.0;              // λ T* (dimensionless)
  double measure_time_s = 0.0;  // T* = k_real / r
  double k_real = 0.0;
  std::int64_t k_int = 0;
  double p14_at_k = 0.0;  // exact p14 at k_int
};

/// Exact p14 with a real-valued iteration count.
inline double exact_p14_at(const MiningParams& p, double k) {
  const double nu = detail::any_of(grover_single_success(k, p.difficulty), p.registers);
  const double mu = detail::clamp01(-std::expm1(-p.classical_rate * k / p.grover_rate));
  return qrace::p14(nu, mu);
}

namespace detail {

inline std::int64_t best_integer_k(const MiningParams& p, std::int64_t lo, std::int64_t hi) {
  lo = std::max<std::int64_t>(lo, 1);
  hi = std::max(hi, lo);
  std::int64_t best = lo;
  double best_val = -1.0;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const double v = exact_p14_at(p, static_cast<double>(k));
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  return best;
}

// Golden-section maximiser of exact p14 over [lo, hi]; verifies on a uniform
// sample that the objective is unimodal and that the result is the maximum.
inline double golden_section_exact_p14(const MiningParams& p, double lo, double hi) {
  auto f = [&](double k) { return exact_p14_at(p, k); };

  constexpr int kSamples = 129;
  std::array<double, kSamples> vals{};
  int argmax = 0;
  for (int i = 0; i < kSamples; ++i) {
    vals[i] = f(lo + (hi - lo) * i / (kSamples - 1));
    if (vals[i] > vals[argmax]) argmax = i;
  }
  const double slack = 1e-12 * vals[argmax];
  for (int i = 1; i < kSamples; ++i) {
    const bool rising = vals[i] > vals[i - 1] + slack;
    const bool falling = vals[i] < vals[i - 1] - slack;
    if ((i <= argmax && falling) || (i > argmax && rising)) {
      throw NumericalError("optimal_k: exact p14 is not unimodal on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
    }
  }

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 400 && b - a > 0.25; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double k = 0.5 * (a + b);
  if (f(k) < vals[argmax] * (1.0 - 1e-9)) {
    throw NumericalError("optimal_k: golden-section search missed the sampled maximum");
  }
  return k;
}

}  // namespace detail

/// Optimal number of Grover iterations before the scheduled measurement.
///
/// approx_p14: K = y0 r/λ from the stationary point of p̃14.
/// exact_p14: golden section on exact p14 over [1, ceil(π√D/4)] followed by
/// an integer scan of ±2.
/// In both cases k_int is the better of floor/ceil of k_real under exact p14.
inline OptimalKResult optimal_k(const MiningParams& p, Objective objective) {
  p.validate();
  OptimalKResult res;
  res.objective = objective;
  if (objective == Objective::approx_p14) {
    res.y0 = optimal_y0();
    res.k_real = res.y0 * p.grover_rate / p.classical_rate;
    if (res.k_real > 9.0e18) throw InputError("optimal_k: optimal K overflows a 64-bit count");
    res.k_int = detail::best_integer_k(p, static_cast<std::int64_t>(std::floor(res.k_real)),
                                       static_cast<std::int64_t>(std::ceil(res.k_real)));
  } else {
    const double hi = std::max(1.0, std::ceil(std::numbers::pi * std::sqrt(p.difficulty) / 4.0));
    if (hi > 9.0e18) throw InputError("optimal_k: search bracket overflows a 64-bit count");
    res.k_real = hi > 1.0 ? detail::golden_section_exact_p14(p, 1.0, hi) : 1.0;
    const auto centre = static_cast<std::int64_t>(std::llround(res.k_real));
    const auto top = static_cast<std::int64_t>(hi);
    res.k_int = detail::best_integer_k(p, centre - 2, std::min(centre + 2, top));
    res.y0 = p.classical_rate * res.k_real / p.grover_rate;
  }
  res.measure_time_s = res.k_real / p.grover_rate;
  res.p14_at_k = exact_p14_at(p, static_cast<double>(res.k_int));
  return res;
}

/// Thresholds standing in for the asymptotic conditions 1 << K, mK << √D and
/// λ ≈ λ0.
struct RegimeThresholds {
  double k_large_min = 100.0;
  double sqrt_d_ratio_max = 1e-2;
  double lambda_ratio_tol = 0.05;
};

struct RegimeReport {
  bool k_large = false;
  double k_over_sqrt_d = 0.0;
  bool k_small_vs_sqrt_d = false;
  double mk_over_sqrt_d = 0.0;
  bool mk_small_vs_sqrt_d = false;
  double lambda_over_lambda0 = 0.0;
  bool lambda_approx_ok = false;

  bool small_power() const {
    return k_large && k_small_vs_sqrt_d && mk_small_vs_sqrt_d && lambda_approx_ok;
  }

  // Name of the first failing flag, empty when all pass.
  std::string first_failure() const {
    if (!k_large) return "k_large";
    if (!k_small_vs_sqrt_d) return "k_small_vs_sqrt_d";
    if (!mk_small_vs_sqrt_d) return "mk_small_vs_sqrt_d";
    if (!lambda_approx_ok) return "lambda_approx_ok";
    return {};
  }
};

inline RegimeReport regime_check(const MiningParams& p, const RegimeThresholds& th = {}) {
  p.validate();
  RegimeReport r;
  const double k = static_cast<double>(p.iterations);
  const double sqrt_d = std::sqrt(p.difficulty);
  r.k_large = k >= th.k_large_min;
  r.k_over_sqrt_d = k / sqrt_d;
  r.k_small_vs_sqrt_d = r.k_over_sqrt_d <= th.sqrt_d_ratio_max;
  r.mk_over_sqrt_d = static_cast<double>(p.registers) * k / sqrt_d;
  r.mk_small_vs_sqrt_d = r.mk_over_sqrt_d <= th.sqrt_d_ratio_max;
  r.lambda_over_lambda0 = p.classical_rate / p.network_rate;
  r.lambda_approx_ok = std::fabs(r.lambda_over_lambda0 - 1.0) <= th.lambda_ratio_tol;
  return r;
}

}  // namespace qrace
