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

// Effective hash rate and per-block cost comparison between a quantum miner
// and a classical hasher.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qrace/errors.hpp"
#include "qrace/model.hpp"

namespace qrace {

/// Currency (or energy) per operation.
struct EconomicParams {
  double grover_cost = 0.0;  // per Grover iteration
  double hash_cost = 0.0;    // per classical hash

  void validate() const {
    if (!(grover_cost >= 0.0) || !std::isfinite(grover_cost)) {
      throw InputError("invalid economics: grover-cost must be finite and >= 0");
    }
    if (!(hash_cost >= 0.0) || !std::isfinite(hash_cost)) {
      throw InputError("invalid economics: hash-cost must be finite and >= 0");
    }
  }
};

enum class AdvantageMethod { general, simplified };

inline std::string_view to_string(AdvantageMethod m) {
  return m == AdvantageMethod::general ? "general" : "simplified";
}

struct AdvantageReport {
  AdvantageMethod method = AdvantageMethod::general;
  double success_probability = 0.0;  // P used for the quantum cost
  std::int64_t iterations = 0;       // K at which P was taken
  double quantum_cost_per_block = 0.0;
  double classical_cost_per_block = 0.0;
  bool advantageous = false;
  double threshold_ratio = 0.0;           // largest grover_cost/hash_cost with advantage
  double quantum_advantage_factor = 0.0;  // classical hashes per Grover iteration spent
  double break_even_grover_cost = 0.0;    // hash_cost * threshold_ratio
};

/// Hash rate of a classical miner winning the same fraction P of blocks.
inline double effective_hash_rate(double P, double difficulty, double lambda0) {
  if (!(P >= 0.0 && P <= 1.0)) throw InputError("effective_hash_rate: P must lie in [0, 1]");
  if (!(difficulty >= 1.0)) throw InputError("effective_hash_rate: difficulty must be >= 1");
  if (!(lambda0 > 0.0)) throw InputError("effective_hash_rate: lambda0 must be > 0");
  return P * difficulty * lambda0;
}

/// Expected Grover iterations spent per block the quantum miner lands:
/// m r / (λ0 P).
inline double iterations_per_quantum_block(std::int64_t registers, double grover_rate,
                                           double lambda0, double P) {
  if (!(P > 0.0)) {
    throw std::domain_error("quantum miner never wins (P = 0): cost per block is undefined");
  }
  return static_cast<double>(registers) * grover_rate / (lambda0 * P);
}

inline double quantum_cost_per_block(const EconomicParams& econ, std::int64_t registers,
                                     double grover_rate, double lambda0, double P) {
  econ.validate();
  return econ.grover_cost * iterations_per_quantum_block(registers, grover_rate, lambda0, P);
}

inline double classical_cost_per_block(const EconomicParams& econ, double difficulty) {
  econ.validate();
  if (!(difficulty >= 1.0)) throw InputError("classical_cost_per_block: difficulty must be >= 1");
  return econ.hash_cost * difficulty;
}

namespace detail {

inline void decide(AdvantageReport& rep, const EconomicParams& econ) {
  rep.break_even_grover_cost = econ.hash_cost * rep.threshold_ratio;
  // Strict inequality: break-even is not an advantage.
  rep.advantageous = econ.hash_cost > 0.0
                         ? econ.grover_cost < econ.hash_cost * rep.threshold_ratio
                         : rep.quantum_cost_per_block < rep.classical_cost_per_block;
}

}  // namespace detail

/// Is quantum mining cheaper per block than classical hashing?
///
/// general: exact P at the caller's K; the quantum miner spends m r/(λ0 P)
/// iterations per block it wins against D hashes classically.
///
/// simplified: peaceful miner at the optimal schedule with P ≈ x/a and
/// λ ≈ λ0, which reduces the condition to grover_cost < hash_cost (4/a) r/λ0.
/// Refused with InputError unless the regime check passes at the optimal K.
inline AdvantageReport advantage_condition(const MiningParams& params, const EconomicParams& econ,
                                           AdvantageMethod method,
                                           const RegimeThresholds& th = {}) {
  params.validate();
  econ.validate();
  AdvantageReport rep;
  rep.method = method;
  rep.classical_cost_per_block = classical_cost_per_block(econ, params.difficulty);
  const double m = static_cast<double>(params.registers);
  const double r = params.grover_rate;
  const double lambda0 = params.network_rate;

  if (method == AdvantageMethod::general) {
    rep.iterations = params.iterations;
    rep.success_probability = success_probability(params, Method::exact).total;
    const double P = rep.success_probability;
    rep.quantum_cost_per_block =
        P > 0.0 ? quantum_cost_per_block(econ, params.registers, r, lambda0, P)
                : (econ.grover_cost > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    rep.threshold_ratio = params.difficulty * lambda0 * P / (m * r);
  } else {
    if (params.mode != Mode::peaceful) {
      throw InputError("simplified advantage condition requires peaceful mode");
    }
    MiningParams at_opt = params;
    at_opt.iterations = optimal_k(params, Objective::approx_p14).k_int;
    const RegimeReport regime = regime_check(at_opt, th);
    if (!regime.small_power()) {
      throw InputError("simplified advantage condition out of regime at the optimal K = " +
                       std::to_string(at_opt.iterations) + ": " + regime.first_failure() +
                       " failed");
    }
    const double a = optimum_constant_a();
    rep.iterations = at_opt.iterations;
    rep.success_probability = 4.0 * m * r * r / (lambda0 * lambda0 * params.difficulty) / a;
    rep.quantum_cost_per_block = econ.grover_cost * m * r / (lambda0 * rep.success_probability);
    rep.threshold_ratio = 4.0 / a * r / lambda0;
  }
  rep.quantum_advantage_factor = rep.threshold_ratio;
  detail::decide(rep, econ);
  return rep;
}

}  // namespace qrace
