// Copyright 2026 The trispar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "trispar/report.h"

#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <utility>

namespace trispar {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 6> kMethodNames = {{
    {Method::kExactNode, "exact_node"},
    {Method::kExactEdge, "exact_edge"},
    {Method::kDoulion, "doulion"},
    {Method::kAdaptive, "adaptive"},
    {Method::kNaive, "naive"},
    {Method::kBuriol, "buriol"},
}};

}  // namespace

std::string_view MethodName(Method method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  throw std::invalid_argument("unknown method");
}

Method ParseMethod(std::string_view name) {
  for (const auto& [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

void ExperimentRecord::SetExact(std::uint64_t t) {
  exact_t = t;
  ratio = t == 0 ? (estimate == 0 ? 1.0 : std::numeric_limits<double>::infinity())
                 : estimate / static_cast<double>(t);
}

double ExpectedSpeedup(double p) {
  if (!(p > 0 && p <= 1)) throw std::invalid_argument("p must lie in (0, 1]");
  return 1.0 / (p * p);
}

SpeedupSummary ComputeSpeedup(double exact_count_seconds, const AdaptiveReport& report) {
  SpeedupSummary s;
  const BatchRecord& last = report.trace.back();
  double count = 0;
  for (const Estimate& e : last.trials) count += e.count_seconds;
  count /= static_cast<double>(last.trials.size());
  s.xfaster1 = exact_count_seconds / count;
  s.xfaster2 = exact_count_seconds / report.total_seconds;
  return s;
}

nlohmann::json ToJson(const ExperimentRecord& r) {
  nlohmann::json j = {
      {"graph_id", r.graph_id},
      {"method", MethodName(r.method)},
      {"parameters", r.parameters},
      {"estimate", r.estimate},
      {"timings",
       {{"load", r.timings.load},
        {"sparsify", r.timings.sparsify},
        {"count", r.timings.count},
        {"total", r.timings.total}}},
      {"seed", r.seed},
  };
  if (r.exact_t) j["exact_t"] = *r.exact_t;
  if (r.ratio) j["ratio"] = *r.ratio;
  return j;
}

ExperimentRecord ExperimentRecordFromJson(const nlohmann::json& j) {
  ExperimentRecord r;
  r.graph_id = j.at("graph_id").get<std::string>();
  r.method = ParseMethod(j.at("method").get<std::string>());
  r.parameters = j.at("parameters").get<std::map<std::string, double>>();
  r.estimate = j.at("estimate").get<double>();
  const auto& t = j.at("timings");
  r.timings = {t.at("load").get<double>(), t.at("sparsify").get<double>(),
               t.at("count").get<double>(), t.at("total").get<double>()};
  r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("exact_t")) r.exact_t = j["exact_t"].get<std::uint64_t>();
  if (j.contains("ratio")) r.ratio = j["ratio"].get<double>();
  if (r.exact_t.has_value() != r.ratio.has_value()) {
    throw std::invalid_argument("ratio must be present exactly when exact_t is");
  }
  return r;
}

nlohmann::json ToJson(const SpeedupSummary& s) {
  return {{"xfaster1", s.xfaster1}, {"xfaster2", s.xfaster2}};
}

SpeedupSummary SpeedupSummaryFromJson(const nlohmann::json& j) {
  return {j.at("xfaster1").get<double>(), j.at("xfaster2").get<double>()};
}

nlohmann::json ToJson(const Estimate& e) {
  return {
      {"p", e.params.p},
      {"seed", e.params.seed},
      {"surviving_edges", e.surviving_edges},
      {"t_prime", e.t_prime},
      {"estimate", e.estimate},
      {"sparsify_seconds", e.sparsify_seconds},
      {"count_seconds", e.count_seconds},
  };
}

nlohmann::json ToJson(const ConditionReport& c) {
  return {
      {"n", c.n},
      {"t", c.t},
      {"delta_max", c.delta_max},
      {"p", c.p},
      {"gamma", c.gamma},
      {"regime", RegimeName(c.regime)},
      {"lhs", c.lhs},
      {"rhs", c.rhs},
      {"satisfied", c.satisfied},
      {"degenerate", c.degenerate},
  };
}

nlohmann::json ToJson(const AdaptiveReport& report) {
  nlohmann::json trace = nlohmann::json::array();
  for (const BatchRecord& b : report.trace) {
    nlohmann::json trials = nlohmann::json::array();
    for (const Estimate& e : b.trials) trials.push_back(ToJson(e));
    // Infinite spread (zeros in the batch) has no JSON number; use null.
    trace.push_back({
        {"p", b.p},
        {"trials", std::move(trials)},
        {"spread", std::isfinite(b.spread) ? nlohmann::json(b.spread) : nlohmann::json()},
        {"concentrated", b.concentrated},
    });
  }
  return {
      {"trace", std::move(trace)},
      {"p_star", report.p_star},
      {"final_estimate", report.final_estimate},
      {"total_trials", report.total_trials},
      {"total_seconds", report.total_seconds},
      {"wall_seconds", report.wall_seconds},
  };
}

nlohmann::json MakeReport(std::string_view command) {
  return {{"schema_version", kReportSchemaVersion}, {"command", command}};
}

void WriteReport(const nlohmann::json& report, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << report.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace trispar
