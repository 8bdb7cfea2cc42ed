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

// Monte Carlo race between the quantum miner and the classical network, and a
// term-by-term absorption oracle for the same chain.
//
// Trials are keyed by (seed, trial index) and grouped in fixed-size chunks;
// per-chunk tallies are integer sums, so the result does not depend on the
// number of worker threads.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "qrace/errors.hpp"
#include "qrace/model.hpp"

namespace qrace::sim {

enum class IterationMode { continuous_rt, floor_rt };

inline std::string_view to_string(IterationMode m) {
  return m == IterationMode::continuous_rt ? "continuous_rt" : "floor_rt";
}

struct SimConfig {
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  IterationMode iteration_mode = IterationMode::continuous_rt;
  std::int64_t chunk_size = 1 << 16;
  std::int64_t cycle_cap = 1'000'000'000;  // per trial
  int threads = 0;                         // 0 = hardware concurrency

  void validate() const {
    if (trials < 1) throw InputError("invalid simulation config: trials must be >= 1");
    if (chunk_size < 1) throw InputError("invalid simulation config: chunk-size must be >= 1");
    if (cycle_cap < 1) throw InputError("invalid simulation config: cycle cap must be >= 1");
    if (threads < 0) throw InputError("invalid simulation config: threads must be >= 0");
  }
};

struct SimResult {
  std::int64_t trials = 0;
  std::int64_t quantum_wins = 0;    // absorbed in state 4 or 8
  std::int64_t classical_wins = 0;  // absorbed in state 5 or 7
  std::int64_t scheduled_wins = 0;  // state 4
  std::int64_t fork_wins = 0;       // state 8
  std::int64_t stale_events = 0;    // visits to state 6
  std::int64_t cycles_total = 0;
  double empirical_P = 0.0;
  double standard_error = 0.0;

  SimResult& operator+=(const SimResult& o) {
    trials += o.trials;
    quantum_wins += o.quantum_wins;
    classical_wins += o.classical_wins;
    scheduled_wins += o.scheduled_wins;
    fork_wins += o.fork_wins;
    stale_events += o.stale_events;
    cycles_total += o.cycles_total;
    return *this;
  }

  void finalize() {
    empirical_P = trials > 0 ? static_cast<double>(quantum_wins) / static_cast<double>(trials) : 0.0;
    standard_error =
        trials > 0 ? std::sqrt(empirical_P * (1.0 - empirical_P) / static_cast<double>(trials)) : 0.0;
  }
};

/// SplitMix64 stream whose starting state is a hash of (seed, trial).
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial)
      : state_(mix(seed ^ mix(trial ^ 0xD1B54A32D192ED03ULL))) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

namespace detail {

struct RaceModel {
  double lambda;
  double horizon;  // T = K/r
  double nu;
  double gamma;
  bool aggressive;
  bool floor_iterations;
  double grover_rate;
  double theta;
  std::int64_t registers;
  std::int64_t cycle_cap;

  explicit RaceModel(const MiningParams& p, const SimConfig& cfg)
      : lambda(p.classical_rate),
        horizon(p.measure_time()),
        nu(nu_exact(p)),
        gamma(p.tie_win_prob),
        aggressive(p.mode == Mode::aggressive),
        floor_iterations(cfg.iteration_mode == IterationMode::floor_rt),
        grover_rate(p.grover_rate),
        theta(p.theta()),
        registers(p.registers),
        cycle_cap(cfg.cycle_cap) {}

  double interrupt_success(double t) const {
    double k = grover_rate * t;
    if (floor_iterations) k = std::floor(k);
    const double s = std::sin(2.0 * (k + 0.5) * theta);
    return qrace::detail::any_of(s * s, registers);
  }

  void run_trial(TrialRng& rng, std::int64_t trial, SimResult& acc) const {
    for (std::int64_t cycle = 1;; ++cycle) {
      if (cycle > cycle_cap) {
        throw SimulationCapError("simulate_race: trial " + std::to_string(trial) +
                                 " exceeded the cycle cap of " + std::to_string(cycle_cap));
      }
      ++acc.cycles_total;
      const double arrival = rng.exponential(lambda);
      if (arrival < horizon) {
        // 1 -> 2: classical block first.
        if (aggressive && rng.uniform() < interrupt_success(arrival)) {
          ++acc.stale_events;  // 2 -> 6
          if (rng.uniform() < gamma) {
            ++acc.fork_wins;  // 6 -> 8
            ++acc.quantum_wins;
            return;
          }
        }
        ++acc.classical_wins;  // 2 -> 5 or 6 -> 7
        return;
      }
      // 1 -> 3: scheduled measurement.
      if (rng.uniform() < nu) {
        ++acc.scheduled_wins;
        ++acc.quantum_wins;
        return;
      }
    }
  }
};

}  // namespace detail

/// Monte Carlo estimate of the quantum miner's success probability.
///
/// Each cycle redraws the classical arrival from Exp(λ) (memoryless), so a
/// failed scheduled measurement returns the race to its initial state.
/// Measurement outcomes are Bernoulli(ν) at T and Bernoulli(q(t)) for an
/// aggressive measurement at the classical arrival time t.
inline SimResult simulate_race(const MiningParams& params, const SimConfig& cfg) {
  params.validate();
  cfg.validate();
  if (params.iterations < 1) throw InputError("simulate_race: requires k >= 1");

  const detail::RaceModel model(params, cfg);
  const std::int64_t chunks = (cfg.trials + cfg.chunk_size - 1) / cfg.chunk_size;
  unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, chunks));

  std::atomic<std::int64_t> next_chunk{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<SimResult> partial(threads);

  auto worker = [&](unsigned id) {
    SimResult& acc = partial[id];
    try {
      for (std::int64_t c = next_chunk++; c < chunks && !failed; c = next_chunk++) {
        const std::int64_t begin = c * cfg.chunk_size;
        const std::int64_t end = std::min(cfg.trials, begin + cfg.chunk_size);
        for (std::int64_t t = begin; t < end; ++t) {
          TrialRng rng(cfg.seed, static_cast<std::uint64_t>(t));
          model.run_trial(rng, t, acc);
          ++acc.trials;
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      failed = true;
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
  }
  if (error) std::rethrow_exception(error);

  SimResult total;
  for (const SimResult& r : partial) total += r;
  total.finalize();
  return total;
}

/// Absorption probabilities (p14, p18) by summing the path weights
/// w(2j) = ν(1-μ)((1-μ)(1-ν))^{j-1} until the geometric tail is below tol.
/// Returns (0, 0) when (1-μ)(1-ν) = 1.
inline std::pair<double, double> markov_absorption_oracle(const TransitionProbabilities& tp,
                                                          double tol = 1e-15) {
  qrace::detail::require_probability(tp.nu, "nu");
  qrace::detail::require_probability(tp.mu, "mu");
  qrace::detail::require_probability(tp.phi, "phi");
  qrace::detail::require_probability(tp.gamma, "gamma");
  if (!(tol > 0.0)) throw InputError("markov_absorption_oracle: tol must be > 0");

  const double loop = (1.0 - tp.mu) * (1.0 - tp.nu);  // 1 -> 3 -> 1
  if (loop == 1.0) return {0.0, 0.0};

  constexpr std::int64_t kMaxTerms = 2'000'000'000;
  double term = tp.nu * (1.0 - tp.mu);
  double sum = 0.0;
  double compensation = 0.0;  // Neumaier
  for (std::int64_t j = 0; term > 0.0; ++j) {
    if (j >= kMaxTerms) throw NumericalError("markov_absorption_oracle: series did not converge");
    const double t = sum + term;
    compensation += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    const double next = term * loop;
    if (next / (1.0 - loop) < tol) break;
    term = next;
  }
  const double p14 = sum + compensation;
  return {p14, (1.0 - p14) * tp.phi * tp.gamma};
}

}  // namespace qrace::sim
