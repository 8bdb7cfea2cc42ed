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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qrace/economics.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using namespace qrace;

namespace {

MiningParams ten_minute_miner() {
  MiningParams p;
  p.difficulty = 1e20;
  p.grover_rate = 66.7e6 / 297784.0;
  p.iterations = optimal_k(p, Objective::approx_p14).k_int;
  return p;
}

}  // namespace

TEST_CASE("effective_hash_rate", "[economics]") {
  CHECK_THAT(effective_hash_rate(4.7e-10, 1e20, 1.0 / 600.0), WithinRel(7.8e7, 0.02));
  CHECK_THAT(effective_hash_rate(1.0, 1e20, 1.0 / 600.0), WithinRel(1.67e17, 0.01));
  CHECK(effective_hash_rate(0.0, 1e20, 1.0 / 600.0) == 0.0);
  CHECK_THROWS_AS(effective_hash_rate(1.5, 1e20, 1.0), InputError);
  CHECK_THROWS_AS(effective_hash_rate(0.5, 0.5, 1.0), InputError);
}

TEST_CASE("effective_hash_rate is linear in P", "[economics][property]") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 0.5);
  for (int i = 0; i < 10000; ++i) {
    const double p = u(rng);
    const double d = std::pow(10.0, 20.0 * u(rng) + 1.0);
    REQUIRE(effective_hash_rate(2.0 * p, d, 0.25) == 2.0 * effective_hash_rate(p, d, 0.25));
    REQUIRE(effective_hash_rate(p, d, 1.0 / 600.0) == p * d * (1.0 / 600.0));
  }
}

TEST_CASE("per-block costs", "[economics]") {
  const EconomicParams zero{0.0, 1e-10};
  CHECK(quantum_cost_per_block(zero, 1, 224.0, 1.0 / 600.0, 4.7e-10) == 0.0);

  const EconomicParams unit{1.0, 1.0};
  const double one = quantum_cost_per_block(unit, 1, 224.0, 1.0 / 600.0, 1e-9);
  CHECK_THAT(quantum_cost_per_block(unit, 2, 224.0, 1.0 / 600.0, 1e-9), WithinRel(2.0 * one, 1e-15));

  CHECK_THAT(iterations_per_quantum_block(1, 224.0, 1.0 / 600.0, 4.7e-10), WithinRel(2.86e14, 1e-3));
  CHECK_THROWS_AS(quantum_cost_per_block(unit, 1, 224.0, 1.0 / 600.0, 0.0), std::domain_error);

  CHECK_THAT(classical_cost_per_block(EconomicParams{0.0, 1e-10}, 1e20), WithinRel(1e10, 1e-15));
  CHECK(classical_cost_per_block(EconomicParams{0.0, 3.0}, 1.0) == 3.0);
  CHECK(classical_cost_per_block(EconomicParams{0.0, 0.0}, 1e20) == 0.0);
  CHECK_THROWS_AS(classical_cost_per_block(EconomicParams{-1.0, 0.0}, 1e20), InputError);
}

TEST_CASE("advantage threshold at the ten-minute example", "[economics]") {
  const MiningParams p = ten_minute_miner();
  const EconomicParams econ{0.0, 1e-10};
  const AdvantageReport simple = advantage_condition(p, econ, AdvantageMethod::simplified);
  const AdvantageReport general = advantage_condition(p, econ, AdvantageMethod::general);

  CHECK_THAT(simple.threshold_ratio, WithinRel(3.49e5, 0.01));
  CHECK_THAT(general.threshold_ratio, WithinRel(3.49e5, 0.01));
  // Both methods agree to three significant figures here.
  CHECK_THAT(general.threshold_ratio, WithinRel(simple.threshold_ratio, 5e-4));

  CHECK_THAT(simple.break_even_grover_cost, WithinRel(3.5e-5, 0.01));
  CHECK(simple.quantum_advantage_factor == simple.threshold_ratio);
  CHECK_THAT(simple.quantum_advantage_factor,
             WithinRel(4.0 / optimum_constant_a() * p.grover_rate / p.network_rate, 1e-15));
  CHECK(simple.advantageous);
  CHECK(general.advantageous);
}

TEST_CASE("4/a matches the 2.59 constant", "[economics]") {
  // mpmath: 4/a = 2.5904409515676594
  CHECK_THAT(4.0 / optimum_constant_a(), WithinAbs(2.590441, 1e-4));
  CHECK_THAT(4.0 / optimum_constant_a(), WithinAbs(2.59, 0.005));
}

TEST_CASE("break-even is not an advantage", "[economics]") {
  const MiningParams p = ten_minute_miner();
  for (AdvantageMethod m : {AdvantageMethod::general, AdvantageMethod::simplified}) {
    const double threshold = advantage_condition(p, EconomicParams{0.0, 1.0}, m).threshold_ratio;
    const AdvantageReport at = advantage_condition(p, EconomicParams{threshold, 1.0}, m);
    CHECK_FALSE(at.advantageous);
    const AdvantageReport free = advantage_condition(p, EconomicParams{0.0, 1.0}, m);
    CHECK(free.advantageous);
  }
}

TEST_CASE("general and simplified agree away from the threshold", "[economics][property]") {
  const MiningParams p = ten_minute_miner();
  const double threshold =
      advantage_condition(p, EconomicParams{0.0, 1.0}, AdvantageMethod::simplified).threshold_ratio;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> logr(-3.0, 3.0);
  std::uniform_real_distribution<double> logc(-12.0, 0.0);
  for (int i = 0; i < 5000; ++i) {
    const double ratio = threshold * std::pow(10.0, logr(rng));
    if (std::fabs(ratio / threshold - 1.0) <= 0.01) continue;
    const double c = std::pow(10.0, logc(rng));
    const EconomicParams econ{ratio * c, c};
    const AdvantageReport g = advantage_condition(p, econ, AdvantageMethod::general);
    const AdvantageReport s = advantage_condition(p, econ, AdvantageMethod::simplified);
    REQUIRE(g.advantageous == s.advantageous);
    REQUIRE(g.advantageous == (g.quantum_cost_per_block < g.classical_cost_per_block));
  }
}

TEST_CASE("simplified method is refused outside its regime", "[economics]") {
  MiningParams p;
  p.difficulty = 1e8;
  p.grover_rate = 10.0;  // optimal K ≈ √D
  CHECK_THROWS_WITH(advantage_condition(p, EconomicParams{1.0, 1.0}, AdvantageMethod::simplified),
                    Catch::Matchers::ContainsSubstring("k_small_vs_sqrt_d"));
  CHECK_NOTHROW(advantage_condition(p, EconomicParams{1.0, 1.0}, AdvantageMethod::general));

  MiningParams agg = ten_minute_miner();
  agg.mode = Mode::aggressive;
  CHECK_THROWS_AS(advantage_condition(agg, EconomicParams{1.0, 1.0}, AdvantageMethod::simplified),
                  InputError);
}

TEST_CASE("a miner that never wins has no advantage", "[economics]") {
  // θ = π/3, so K = 1 rotates to sin²(π) = 0 and the scheduled measurement
  // never succeeds.
  MiningParams never;
  never.difficulty = 1.0 / std::pow(std::sin(std::numbers::pi / 3.0), 2);
  never.grover_rate = 1.0;
  never.iterations = 1;
  const AdvantageReport r =
      advantage_condition(never, EconomicParams{1.0, 1.0}, AdvantageMethod::general);
  CHECK(r.success_probability < 1e-15);
  CHECK_FALSE(r.advantageous);
}
