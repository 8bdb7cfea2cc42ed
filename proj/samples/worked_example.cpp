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

// Evaluates a peaceful single-register miner against Bitcoin-scale difficulty:
// a 66.7 MHz gate clock with 297784-deep Grover iterations, D = 1e20, 10 minute
// blocks.

#include <cmath>
#include <cstdio>

#include "qrace/qrace.hpp"

int main() {
  qrace::MiningParams p;
  p.difficulty = 1e20;
  p.registers = 1;
  p.grover_rate = 66.7e6 / 297784.0;

  const qrace::OptimalKResult opt = qrace::optimal_k(p, qrace::Objective::approx_p14);
  p.iterations = opt.k_int;

  const qrace::SuccessBreakdown approx = qrace::success_probability(p, qrace::Method::approx);
  const qrace::SuccessBreakdown exact = qrace::success_probability(p, qrace::Method::exact);
  const double a = qrace::optimum_constant_a();

  std::printf("grover rate r            %.2f it/s\n", p.grover_rate);
  std::printf("y0                       %.8f\n", opt.y0);
  std::printf("measure after T*         %.1f s (%.1f min)\n", opt.measure_time_s,
              opt.measure_time_s / 60.0);
  std::printf("K                        %lld\n", static_cast<long long>(opt.k_int));
  std::printf("x                        %.3e\n", p.power_x());
  std::printf("P (approx, exact)        %.3e, %.3e\n", approx.total, exact.total);
  std::printf("x / (a + x)              %.3e\n", p.power_x() / (a + p.power_x()));
  std::printf("effective hash rate      %.3e H/s\n",
              qrace::effective_hash_rate(exact.total, p.difficulty, p.network_rate));
  std::printf("network hash rate        %.3e H/s\n", p.difficulty * p.network_rate);

  const qrace::EconomicParams econ{0.0, 1e-10};  // joules per hash
  const qrace::AdvantageReport general =
      qrace::advantage_condition(p, econ, qrace::AdvantageMethod::general);
  const qrace::AdvantageReport simple =
      qrace::advantage_condition(p, econ, qrace::AdvantageMethod::simplified);
  std::printf("threshold Q/C (general)  %.4e\n", general.threshold_ratio);
  std::printf("threshold Q/C (simple)   %.4e\n", simple.threshold_ratio);
  std::printf("break-even energy        %.2e J per Grover iteration\n",
              simple.break_even_grover_cost);
  return 0;
}
