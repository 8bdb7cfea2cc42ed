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

// Command-line front end. Kept out of qrace.hpp because it pulls in CLI11 and
// nlohmann/json; tools/qrace.cpp is a thin main() over run().
//
// Exit codes: 0 success, 2 input error, 3 numerical failure, 4 simulation
// cycle cap reached.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <iostream>
#include <iterator>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrace/qrace.hpp"

namespace qrace::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitSimCap = 4;

/// Shortest decimal text that reads back to the same double.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Config reader for --config. A document starting with '{' is read as JSON
/// (either a flat object of flag names, or a full run record whose "params"
/// object is used); anything else goes to CLI11's TOML/INI reader.
class ConfigReader : public CLI::ConfigTOML {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    std::string text((std::istreambuf_iterator<char>(input)), std::istreambuf_iterator<char>());
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
      std::istringstream in(text);
      return CLI::ConfigTOML::from_config(in);
    }
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::exception& e) {
      throw CLI::ConversionError(std::string("config: invalid JSON: ") + e.what());
    }
    if (doc.contains("params") && doc["params"].is_object()) doc = doc["params"];
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : doc.items()) {
      if (value.is_null() || value.is_object() || value.is_array()) continue;
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_string()) {
        item.inputs.push_back(value.get<std::string>());
      } else if (value.is_number_float()) {
        item.inputs.push_back(format_double(value.get<double>()));
      } else {
        item.inputs.push_back(value.dump());
      }
      items.push_back(std::move(item));
    }
    return items;
  }
};

/// Raw option values as parsed; converted into model types per command.
struct Options {
  std::optional<double> difficulty;
  std::int64_t registers = 1;
  std::optional<double> grover_rate;
  std::optional<double> lambda;
  std::optional<double> block_minutes;
  std::optional<double> network_lambda;
  std::optional<double> network_block_minutes;
  std::optional<std::int64_t> k;
  double gamma = 0.0;
  std::string mode = "peaceful";

  double grover_cost = 0.0;
  double hash_cost = 0.0;
  std::string method = "both";

  std::int64_t trials = 1'000'000;
  std::uint64_t seed = 1;
  std::string iteration_mode = "continuous_rt";
  std::int64_t chunk_size = 1 << 16;
  std::int64_t cycle_cap = 1'000'000'000;

  std::string axis;
  double from = 0.0;
  double to = 0.0;
  std::int64_t steps = 0;
  std::string scale = "linear";

  std::optional<std::string> format;
};

namespace detail {

inline double rate_from(const std::optional<double>& per_second, const std::optional<double>& minutes,
                        double fallback, const char* name) {
  if (per_second) return *per_second;
  if (minutes) {
    if (!(*minutes > 0.0)) throw InputError(std::string(name) + ": block minutes must be > 0");
    return 1.0 / (60.0 * *minutes);
  }
  return fallback;
}

inline Mode parse_mode(const std::string& s) {
  if (s == "peaceful") return Mode::peaceful;
  if (s == "aggressive") return Mode::aggressive;
  throw InputError("mode must be peaceful or aggressive, got '" + s + "'");
}

// Model parameters; K is left at 0 when not supplied.
inline MiningParams mining_params(const Options& o) {
  if (!o.difficulty) throw InputError("invalid parameters: --difficulty is required");
  if (!o.grover_rate) throw InputError("invalid parameters: --grover-rate is required");
  MiningParams p;
  p.difficulty = *o.difficulty;
  p.registers = o.registers;
  p.grover_rate = *o.grover_rate;
  p.network_rate = rate_from(o.network_lambda, o.network_block_minutes, kBitcoinBlockRate,
                             "network lambda");
  p.classical_rate = rate_from(o.lambda, o.block_minutes, p.network_rate, "lambda");
  p.iterations = o.k.value_or(0);
  p.tie_win_prob = o.gamma;
  p.mode = parse_mode(o.mode);
  p.validate();
  return p;
}

// K from --k (must be >= 1) or, when absent, the analytic optimum.
inline MiningParams params_with_k(const Options& o) {
  MiningParams p = mining_params(o);
  if (o.k) {
    if (*o.k < 1) throw InputError("invalid parameters: k must be >= 1 for this command");
  } else {
    p.iterations = optimal_k(p, Objective::approx_p14).k_int;
  }
  return p;
}

inline sim::SimConfig sim_config(const Options& o) {
  sim::SimConfig cfg;
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  if (o.iteration_mode == "continuous_rt") {
    cfg.iteration_mode = sim::IterationMode::continuous_rt;
  } else if (o.iteration_mode == "floor_rt") {
    cfg.iteration_mode = sim::IterationMode::floor_rt;
  } else {
    throw InputError("iteration-mode must be continuous_rt or floor_rt");
  }
  cfg.chunk_size = o.chunk_size;
  cfg.cycle_cap = o.cycle_cap;
  if (const char* env = std::getenv("QRACE_THREADS"); env != nullptr && *env != '\0') {
    int threads = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), threads);
    if (ec != std::errc{} || *ptr != '\0' || threads < 0) {
      throw InputError("QRACE_THREADS must be a non-negative integer");
    }
    cfg.threads = threads;
  }
  cfg.validate();
  return cfg;
}

inline EconomicParams economic_params(const Options& o) {
  EconomicParams e{o.grover_cost, o.hash_cost};
  e.validate();
  return e;
}

inline std::string timestamp() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// null for non-finite values, which JSON cannot carry.
inline Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json params_json(const MiningParams& p) {
  Json j;
  j["difficulty"] = p.difficulty;
  j["registers"] = p.registers;
  j["grover-rate"] = p.grover_rate;
  j["lambda"] = p.classical_rate;
  j["network-lambda"] = p.network_rate;
  j["k"] = p.iterations;
  j["gamma"] = p.tie_win_prob;
  j["mode"] = std::string(to_string(p.mode));
  return j;
}

inline Json regime_json(const RegimeReport& r) {
  Json j;
  j["k_large"] = r.k_large;
  j["k_over_sqrt_d"] = r.k_over_sqrt_d;
  j["k_small_vs_sqrt_d"] = r.k_small_vs_sqrt_d;
  j["mk_over_sqrt_d"] = r.mk_over_sqrt_d;
  j["mk_small_vs_sqrt_d"] = r.mk_small_vs_sqrt_d;
  j["lambda_over_lambda0"] = r.lambda_over_lambda0;
  j["lambda_approx_ok"] = r.lambda_approx_ok;
  j["small_power"] = r.small_power();
  return j;
}

inline Json optimal_json(const OptimalKResult& r) {
  Json j;
  j["objective"] = std::string(to_string(r.objective));
  j["y0"] = r.y0;
  j["measure_time_s"] = r.measure_time_s;
  j["measure_time_min"] = r.measure_time_s / 60.0;
  j["k_real"] = r.k_real;
  j["k_int"] = r.k_int;
  j["p14_at_k"] = r.p14_at_k;
  return j;
}

inline Json advantage_json(const AdvantageReport& r) {
  Json j;
  j["method"] = std::string(to_string(r.method));
  j["k"] = r.iterations;
  j["success_probability"] = r.success_probability;
  j["quantum_cost_per_block"] = number(r.quantum_cost_per_block);
  j["classical_cost_per_block"] = r.classical_cost_per_block;
  j["advantageous"] = r.advantageous;
  j["threshold_ratio"] = r.threshold_ratio;
  j["quantum_advantage_factor"] = r.quantum_advantage_factor;
  j["break_even_grover_cost"] = r.break_even_grover_cost;
  return j;
}

// Exact and approximate quantities at one parameter point, flat and in a
// fixed order (shared by evaluate and sweep).
inline Json point_results(const MiningParams& p) {
  const TransitionProbabilities exact = transition_probabilities(p, Method::exact);
  const TransitionProbabilities approx = transition_probabilities(p, Method::approx);
  const SuccessBreakdown se = success_probability(exact);
  const SuccessBreakdown sa = success_probability(approx);
  Json j;
  j["x"] = p.power_x();
  j["y"] = p.time_y();
  j["T"] = p.measure_time();
  j["nu"] = exact.nu;
  j["nu_tilde"] = approx.nu;
  j["mu"] = exact.mu;
  j["phi"] = exact.phi;
  j["phi_tilde"] = approx.phi;
  j["p14"] = se.p14;
  j["p14_tilde"] = sa.p14;
  j["p18"] = se.p18;
  j["p18_tilde"] = sa.p18;
  j["P"] = se.total;
  j["P_tilde"] = sa.total;
  j["approx_clamped"] = sa.clamped;
  j["effective_hash_rate"] = effective_hash_rate(se.total, p.difficulty, p.network_rate);
  j["effective_hash_rate_tilde"] = effective_hash_rate(sa.total, p.difficulty, p.network_rate);
  j["network_hash_rate"] = p.difficulty * p.network_rate;
  return j;
}

inline Json record(const std::string& command, Json params, Json results, const RegimeReport& regime) {
  Json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["results"] = std::move(results);
  j["regime"] = regime_json(regime);
  j["version"] = kVersion;
  j["timestamp"] = timestamp();
  return j;
}

inline std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void flatten(const Json& j, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out.emplace_back(prefix, csv_cell(j));
  }
}

inline void write_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& cols,
                      bool header) {
  if (header) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].first;
    out << '\n';
  }
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i].second;
  out << '\n';
}

inline void emit(std::ostream& out, const Json& rec, const std::string& format) {
  if (format == "csv") {
    std::vector<std::pair<std::string, std::string>> cols;
    cols.emplace_back("command", rec["command"].get<std::string>());
    flatten(rec["params"], "params", cols);
    flatten(rec["results"], "results", cols);
    flatten(rec["regime"], "regime", cols);
    cols.emplace_back("version", rec["version"].get<std::string>());
    cols.emplace_back("timestamp", rec["timestamp"].get<std::string>());
    write_csv(out, cols, true);
  } else {
    out << rec.dump(2) << '\n';
  }
}

inline int cmd_evaluate(const Options& o, std::ostream& out) {
  const MiningParams p = params_with_k(o);
  emit(out, record("evaluate", params_json(p), point_results(p), regime_check(p)),
       o.format.value_or("json"));
  return kExitOk;
}

inline int cmd_optimize(const Options& o, std::ostream& out) {
  MiningParams p = mining_params(o);
  const OptimalKResult approx = optimal_k(p, Objective::approx_p14);
  const OptimalKResult exact = optimal_k(p, Objective::exact_p14);
  const double y0 = optimal_y0();
  const double a = optimum_constant_a();
  Json results;
  results["y0"] = y0;
  results["stationarity_residual"] = 2.0 + std::exp(y0) * (y0 - 2.0);
  results["a"] = a;
  results["four_over_a"] = 4.0 / a;
  results["reach_measurement_probability"] = std::exp(-y0);
  results["measure_time_s"] = approx.measure_time_s;
  results["measure_time_min"] = approx.measure_time_s / 60.0;
  results["approx"] = optimal_json(approx);
  results["exact"] = optimal_json(exact);
  Json params = params_json(p);
  params.erase("k");
  p.iterations = approx.k_int;
  emit(out, record("optimize", std::move(params), std::move(results), regime_check(p)),
       o.format.value_or("json"));
  return kExitOk;
}

inline int cmd_simulate(const Options& o, std::ostream& out) {
  const MiningParams p = params_with_k(o);
  const sim::SimConfig cfg = sim_config(o);
  const sim::SimResult r = sim::simulate_race(p, cfg);
  const SuccessBreakdown exact = success_probability(p, Method::exact);

  Json params = params_json(p);
  params["trials"] = cfg.trials;
  params["seed"] = cfg.seed;
  params["iteration-mode"] = std::string(to_string(cfg.iteration_mode));
  params["chunk-size"] = cfg.chunk_size;
  params["cycle-cap"] = cfg.cycle_cap;

  Json results;
  results["trials"] = r.trials;
  results["quantum_wins"] = r.quantum_wins;
  results["classical_wins"] = r.classical_wins;
  results["scheduled_wins"] = r.scheduled_wins;
  results["fork_wins"] = r.fork_wins;
  results["stale_events"] = r.stale_events;
  results["cycles_total"] = r.cycles_total;
  results["empirical_P"] = r.empirical_P;
  results["standard_error"] = r.standard_error;
  results["exact_P"] = exact.total;
  double z = 0.0;
  if (r.standard_error > 0.0) {
    z = (r.empirical_P - exact.total) / r.standard_error;
  } else if (r.empirical_P != exact.total) {
    z = std::numeric_limits<double>::infinity();
  }
  results["z_score"] = number(z);
  emit(out, record("simulate", std::move(params), std::move(results), regime_check(p)),
       o.format.value_or("json"));
  return kExitOk;
}

inline int cmd_advantage(const Options& o, std::ostream& out) {
  if (o.method != "both" && o.method != "general" && o.method != "simplified") {
    throw InputError("method must be general, simplified or both");
  }
  MiningParams p = mining_params(o);
  const EconomicParams econ = economic_params(o);
  MiningParams at_opt = p;
  at_opt.iterations = optimal_k(p, Objective::approx_p14).k_int;

  Json params = params_json(p);
  if (o.k) {
    if (*o.k < 1) throw InputError("invalid parameters: k must be >= 1 for this command");
  } else {
    params.erase("k");
  }
  params["grover-cost"] = econ.grover_cost;
  params["hash-cost"] = econ.hash_cost;
  params["method"] = o.method;

  Json results;
  if (o.method != "simplified") {
    if (o.k) results["general"] = advantage_json(advantage_condition(p, econ, AdvantageMethod::general));
    results["general_at_optimal_k"] =
        advantage_json(advantage_condition(at_opt, econ, AdvantageMethod::general));
  }
  if (o.method == "simplified") {
    results["simplified"] = advantage_json(advantage_condition(p, econ, AdvantageMethod::simplified));
  } else if (o.method == "both") {
    try {
      results["simplified"] =
          advantage_json(advantage_condition(p, econ, AdvantageMethod::simplified));
    } catch (const InputError& e) {
      results["simplified"] = Json{{"method", "simplified"}, {"refused", e.what()}};
    }
  }
  emit(out, record("advantage", std::move(params), std::move(results), regime_check(o.k ? p : at_opt)),
       o.format.value_or("json"));
  return kExitOk;
}

/// Sweep axes and the fixed CSV column order that follows the axis column.
inline const std::vector<std::string>& sweep_axes() {
  static const std::vector<std::string> axes{"K", "D", "m", "r", "lambda", "gamma"};
  return axes;
}

inline const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols{
      "k",   "difficulty", "registers", "grover_rate", "lambda",    "gamma", "mode",
      "x",   "y",          "T",         "nu",          "nu_tilde",  "mu",    "phi",
      "phi_tilde", "p14",  "p14_tilde", "p18",         "p18_tilde", "P",     "P_tilde",
      "approx_clamped",    "effective_hash_rate"};
  return cols;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  const auto& axes = sweep_axes();
  if (std::find(axes.begin(), axes.end(), o.axis) == axes.end()) {
    throw InputError("sweep: unknown axis '" + o.axis + "' (expected K, D, m, r, lambda or gamma)");
  }
  if (!(o.from < o.to)) throw InputError("sweep: require from < to");
  if (o.steps < 2) throw InputError("sweep: require steps >= 2");
  if (o.scale != "linear" && o.scale != "log") throw InputError("sweep: scale must be linear or log");
  if (o.scale == "log" && !(o.from > 0.0)) throw InputError("sweep: log scale requires from > 0");
  if (o.k && *o.k < 1 && o.axis != "K") throw InputError("invalid parameters: k must be >= 1");

  Options base = o;
  if (o.axis == "K") base.k = 1;
  const std::string format = o.format.value_or("csv");
  bool header = true;
  for (std::int64_t i = 0; i < o.steps; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(o.steps - 1);
    const double v = o.scale == "linear" ? o.from + f * (o.to - o.from)
                                         : o.from * std::pow(o.to / o.from, f);
    Options row = base;
    if (o.axis == "K") row.k = std::llround(v);
    if (o.axis == "D") row.difficulty = v;
    if (o.axis == "m") row.registers = std::llround(v);
    if (o.axis == "r") row.grover_rate = v;
    if (o.axis == "lambda") {
      row.lambda = v;
      row.block_minutes.reset();
    }
    if (o.axis == "gamma") row.gamma = v;
    const MiningParams p = params_with_k(row);
    Json res = point_results(p);

    if (format == "json") {
      Json params = params_json(p);
      params["axis"] = o.axis;
      params["axis-value"] = v;
      out << record("sweep", std::move(params), std::move(res), regime_check(p)).dump() << '\n';
      continue;
    }
    std::vector<std::pair<std::string, std::string>> cols;
    cols.emplace_back(o.axis, format_double(v));
    const Json pj = params_json(p);
    for (const auto& name : sweep_columns()) {
      std::string cell;
      if (name == "k") cell = csv_cell(pj["k"]);
      else if (name == "difficulty") cell = csv_cell(pj["difficulty"]);
      else if (name == "registers") cell = csv_cell(pj["registers"]);
      else if (name == "grover_rate") cell = csv_cell(pj["grover-rate"]);
      else if (name == "lambda") cell = csv_cell(pj["lambda"]);
      else if (name == "gamma") cell = csv_cell(pj["gamma"]);
      else if (name == "mode") cell = csv_cell(pj["mode"]);
      else cell = csv_cell(res[name]);
      cols.emplace_back(name, std::move(cell));
    }
    write_csv(out, cols, header);
    header = false;
  }
  return kExitOk;
}

}  // namespace detail

/// Parses args (args[0] is the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantum mining race model: success probability, optimal Grover schedule, "
               "economics and Monte Carlo validation",
               "qrace"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.set_config("--config", "", "Flag-name key/value file (TOML/INI or JSON); flags override it");
  app.config_formatter(std::make_shared<ConfigReader>());

  app.add_option("--difficulty", o.difficulty, "D, expected hashes per block (>= 1)");
  app.add_option("--registers", o.registers, "m, parallel Grover registers")->capture_default_str();
  app.add_option("--grover-rate", o.grover_rate, "r, Grover iterations per second per register");
  auto* lambda = app.add_option("--lambda", o.lambda, "classical block rate, blocks per second");
  auto* minutes = app.add_option("--block-minutes", o.block_minutes,
                                 "classical mean minutes per block (alternative to --lambda)");
  lambda->excludes(minutes);
  auto* nlambda = app.add_option("--network-lambda", o.network_lambda,
                                 "whole-network block rate, blocks per second (default 1/600)");
  auto* nminutes = app.add_option("--network-block-minutes", o.network_block_minutes,
                                  "whole-network mean minutes per block");
  nlambda->excludes(nminutes);
  app.add_option("--k", o.k, "K, Grover iterations before the scheduled measurement");
  app.add_option("--gamma", o.gamma, "probability a fork resolves for the quantum miner")
      ->capture_default_str();
  app.add_option("--mode", o.mode, "peaceful | aggressive")->capture_default_str();
  app.add_option("--grover-cost", o.grover_cost, "cost per Grover iteration")->capture_default_str();
  app.add_option("--hash-cost", o.hash_cost, "cost per classical hash")->capture_default_str();
  app.add_option("--method", o.method, "advantage method: general | simplified | both")
      ->capture_default_str();
  app.add_option("--trials", o.trials, "simulated races")->capture_default_str();
  app.add_option("--seed", o.seed, "simulation seed")->capture_default_str();
  app.add_option("--iteration-mode", o.iteration_mode, "continuous_rt | floor_rt")
      ->capture_default_str();
  app.add_option("--chunk-size", o.chunk_size, "trials per deterministic work unit")
      ->capture_default_str();
  app.add_option("--cycle-cap", o.cycle_cap, "maximum cycles per simulated race")
      ->capture_default_str();
  app.add_option("--axis", o.axis, "sweep axis: K | D | m | r | lambda | gamma");
  app.add_option("--from", o.from, "sweep start");
  app.add_option("--to", o.to, "sweep end");
  app.add_option("--steps", o.steps, "sweep grid points (>= 2)");
  app.add_option("--scale", o.scale, "sweep spacing: linear | log")->capture_default_str();
  app.add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* evaluate = app.add_subcommand("evaluate", "exact and approximate success probability at one point");
  auto* optimize = app.add_subcommand("optimize", "optimal Grover iteration count");
  auto* sweep = app.add_subcommand("sweep", "CSV grid over one parameter");
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo race against the exact model");
  auto* advantage = app.add_subcommand("advantage", "cost-per-block advantage conditions");
  for (auto* sub : {evaluate, optimize, sweep, simulate, advantage}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(kVersion) + "\n"
                                                             : app.help());
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*evaluate) return detail::cmd_evaluate(o, out);
    if (*optimize) return detail::cmd_optimize(o, out);
    if (*sweep) return detail::cmd_sweep(o, out);
    if (*simulate) return detail::cmd_simulate(o, out);
    if (*advantage) return detail::cmd_advantage(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SimulationCapError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSimCap;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitInput;
}

}  // namespace qrace::cli
