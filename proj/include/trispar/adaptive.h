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

#ifndef TRISPAR_ADAPTIVE_H_
#define TRISPAR_ADAPTIVE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trispar/exact_count.h"
#include "trispar/graph.h"
#include "trispar/sparsify.h"

namespace trispar {

enum class ConditionRegime {
  kDeltaDominant,     // p^2 * delta >= 1: requires p t / delta >= log^(6+gamma) n
  kTriangleDominant,  // p^2 * delta <  1: requires p^3 t     >= log^(6+gamma) n
};

std::string_view RegimeName(ConditionRegime regime);

inline constexpr double kDefaultGamma = 1.0;

struct ConditionReport {
  double n = 0;
  double t = 0;
  double delta_max = 0;
  double p = 0;
  double gamma = 0;
  ConditionRegime regime = ConditionRegime::kTriangleDominant;
  double lhs = 0;
  double rhs = 0;
  bool satisfied = false;
  // t == 0 or delta == 0; never satisfied.
  bool degenerate = false;
};

// Evaluates the density hypothesis that guarantees concentration of the
// sparsified count. Only the inequality is checked: the guarantee also needs
// unspecified constants and large n, so a satisfied report is not a promise
// of concentration at any particular size. Quantities are real-valued so
// asymptotic regimes (t = n^1.6 at huge n) can be probed.
// Throws std::invalid_argument unless n >= 3, t >= 0, delta >= 0,
// 0 < p <= 1 and gamma > 0.
ConditionReport CheckConditions(double n, double t, double delta_max, double p,
                                double gamma = kDefaultGamma);

inline constexpr double kDefaultPFloor = 0.001;

struct PRecommendation {
  double p = 1.0;
  // Hints were given and no grid point satisfied the conditions; p is the
  // clamp value 1.
  bool unsatisfiable = false;
};

// Without both hints: n^(-1/2) clamped to [p_floor, 1]. With both hints: the
// smallest p on the grid n^(-1/2) * 2^k (k in Z, p_floor <= p <= 1, plus 1
// itself) that satisfies CheckConditions at gamma = kDefaultGamma.
PRecommendation RecommendP(double n, std::optional<double> t_hint = {},
                           std::optional<double> delta_hint = {},
                           double p_floor = kDefaultPFloor);

// max(n^(-1/2), kDefaultPFloor), capped at 1.
double DefaultP0(double n);

// (max - min) / mean; +infinity when the batch is empty, contains a zero or
// has a non-positive mean.
double RelativeSpread(std::span<const double> estimates);

struct BatchRecord {
  double p = 0;
  std::vector<Estimate> trials;
  double spread = 0;
  bool concentrated = false;

  std::vector<double> estimates() const;
  double mean() const;
};

struct AdaptiveOptions {
  // First sampling rate; 0 selects DefaultP0(n).
  double p0 = 0.0;
  int trials_per_p = 6;
  double spread_threshold = 0.1;
  std::uint64_t master_seed = 0;
  Counter counter = Counter::kNodeIterator;
  // Trials of one batch run concurrently on this many workers (0 = all).
  int threads = 1;
};

struct AdaptiveReport {
  std::vector<BatchRecord> trace;
  double p_star = 1.0;
  double final_estimate = 0.0;
  std::uint64_t total_trials = 0;
  // Sum of sparsify and count time over every trial of every batch.
  double total_seconds = 0.0;
  double wall_seconds = 0.0;
};

// Seed of trial `trial` in batch `batch` of a search started from `master`.
std::uint64_t TrialSeed(std::uint64_t master, std::uint64_t batch, std::uint64_t trial);

// Runs batches of independent estimates at p0, 2 p0, 4 p0, ... until a batch
// is concentrated (relative spread <= threshold). The sequence is capped at
// p = 1, where the count is exact: that batch holds a single trial and is
// always accepted, so the search ends after at most ceil(log2(1/p0)) + 1
// batches. Throws std::invalid_argument on p0 outside (0, 1],
// trials_per_p < 2 or a non-positive threshold.
AdaptiveReport DoublingSearch(const Graph& g, const AdaptiveOptions& options);

}  // namespace trispar

#endif  // TRISPAR_ADAPTIVE_H_
