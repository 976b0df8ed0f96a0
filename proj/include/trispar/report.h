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

#ifndef TRISPAR_REPORT_H_
#define TRISPAR_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "trispar/adaptive.h"
#include "trispar/sparsify.h"

namespace trispar {

// Bumped whenever a field of the JSON report changes meaning or shape.
inline constexpr int kReportSchemaVersion = 1;

enum class Method { kExactNode, kExactEdge, kDoulion, kAdaptive, kNaive, kBuriol };

std::string_view MethodName(Method method);
Method ParseMethod(std::string_view name);

struct Timings {
  double load = 0;
  double sparsify = 0;
  double count = 0;
  double total = 0;

  friend bool operator==(const Timings&, const Timings&) = default;
};

// One row of a results table.
struct ExperimentRecord {
  std::string graph_id;
  Method method = Method::kExactNode;
  std::map<std::string, double> parameters;
  double estimate = 0;
  std::optional<std::uint64_t> exact_t;
  // estimate / exact_t; present iff exact_t is. Set by SetExact.
  std::optional<double> ratio;
  Timings timings;
  std::uint64_t seed = 0;

  void SetExact(std::uint64_t t);

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

// Speedups of counting on the sample versus counting the full graph.
struct SpeedupSummary {
  // Exact count time over the mean count time on the sample at p*.
  double xfaster1 = 0;
  // Exact count time over the whole search: every sparsification and count.
  double xfaster2 = 0;

  friend bool operator==(const SpeedupSummary&, const SpeedupSummary&) = default;
};

// 1 / p^2, the node-iterator speedup expected from keeping a p fraction of
// edges. Throws std::invalid_argument unless 0 < p <= 1.
double ExpectedSpeedup(double p);

SpeedupSummary ComputeSpeedup(double exact_count_seconds, const AdaptiveReport& report);

nlohmann::json ToJson(const ExperimentRecord& record);
// Throws nlohmann::json::exception on missing fields and
// std::invalid_argument when ratio and exact_t disagree in presence.
ExperimentRecord ExperimentRecordFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const SpeedupSummary& summary);
SpeedupSummary SpeedupSummaryFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const Estimate& estimate);
nlohmann::json ToJson(const ConditionReport& report);
nlohmann::json ToJson(const AdaptiveReport& report);

// Top-level document: {"schema_version", "command", ...extra}.
nlohmann::json MakeReport(std::string_view command);
void WriteReport(const nlohmann::json& report, const std::filesystem::path& path);

}  // namespace trispar

#endif  // TRISPAR_REPORT_H_
