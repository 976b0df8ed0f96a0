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

#include "trispar/adaptive.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "parallel.h"
#include "trispar/log_base.h"
#include "trispar/random.h"
#include "trispar/timer.h"

namespace trispar {

std::string_view RegimeName(ConditionRegime regime) {
  return regime == ConditionRegime::kDeltaDominant ? "delta_dominant" : "triangle_dominant";
}

ConditionReport CheckConditions(double n, double t, double delta_max, double p,
                                double gamma) {
  if (!(n >= 3)) throw std::invalid_argument("condition check needs n >= 3");
  if (!(t >= 0) || !(delta_max >= 0)) {
    throw std::invalid_argument("triangle count and delta must be non-negative");
  }
  if (!(p > 0 && p <= 1)) throw std::invalid_argument("p must lie in (0, 1]");
  if (!(gamma > 0)) throw std::invalid_argument("gamma must be positive");

  ConditionReport r{.n = n, .t = t, .delta_max = delta_max, .p = p, .gamma = gamma};
  r.regime = p * p * delta_max >= 1.0 ? ConditionRegime::kDeltaDominant
                                      : ConditionRegime::kTriangleDominant;
  r.lhs = r.regime == ConditionRegime::kDeltaDominant ? p * t / delta_max : p * p * p * t;
  r.rhs = std::pow(Log(n), 6.0 + gamma);
  r.degenerate = t == 0 || delta_max == 0;
  r.satisfied = !r.degenerate && r.lhs >= r.rhs;
  return r;
}

PRecommendation RecommendP(double n, std::optional<double> t_hint,
                           std::optional<double> delta_hint, double p_floor) {
  const double base = 1.0 / std::sqrt(n);
  if (!t_hint || !delta_hint) {
    return {.p = std::clamp(base, p_floor, 1.0)};
  }
  std::vector<double> grid;
  double lowest = base;
  while (lowest / 2 >= p_floor) lowest /= 2;
  for (double p = lowest; p < 1.0; p *= 2) {
    if (p >= p_floor) grid.push_back(p);
  }
  grid.push_back(1.0);
  for (double p : grid) {
    if (CheckConditions(n, *t_hint, *delta_hint, p).satisfied) return {.p = p};
  }
  return {.p = 1.0, .unsatisfiable = true};
}

double DefaultP0(double n) {
  return std::min(1.0, std::max(1.0 / std::sqrt(n), kDefaultPFloor));
}

double RelativeSpread(std::span<const double> estimates) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (estimates.empty()) return kInf;
  if (std::any_of(estimates.begin(), estimates.end(), [](double x) { return x == 0.0; })) {
    return kInf;
  }
  const auto [lo, hi] = std::minmax_element(estimates.begin(), estimates.end());
  const double mean = std::accumulate(estimates.begin(), estimates.end(), 0.0) /
                      static_cast<double>(estimates.size());
  if (!(mean > 0.0)) return kInf;
  return (*hi - *lo) / mean;
}

std::vector<double> BatchRecord::estimates() const {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const Estimate& e : trials) out.push_back(e.estimate);
  return out;
}

double BatchRecord::mean() const {
  const auto values = estimates();
  if (values.empty()) return 0.0;
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

std::uint64_t TrialSeed(std::uint64_t master, std::uint64_t batch, std::uint64_t trial) {
  return DeriveSeed(DeriveSeed(master, batch), trial);
}

AdaptiveReport DoublingSearch(const Graph& g, const AdaptiveOptions& options) {
  const double p0 = options.p0 == 0.0 ? DefaultP0(std::max<double>(g.num_vertices(), 1))
                                      : options.p0;
  if (!(p0 > 0.0 && p0 <= 1.0)) throw std::invalid_argument("p0 must lie in (0, 1]");
  if (options.trials_per_p < 2) throw std::invalid_argument("need at least 2 trials per p");
  if (!(options.spread_threshold > 0.0)) {
    throw std::invalid_argument("spread threshold must be positive");
  }

  Stopwatch wall;
  AdaptiveReport report;
  const int threads = ResolveThreads(options.threads);
  double p = p0;
  for (std::uint64_t batch = 0;; ++batch) {
    const bool exact = p >= 1.0;
    if (exact) p = 1.0;
    BatchRecord record;
    record.p = p;
    record.trials.resize(exact ? 1 : static_cast<std::size_t>(options.trials_per_p));
    ParallelChunks(record.trials.size(), threads, 1,
                   [&](int, std::size_t begin, std::size_t end) {
                     for (std::size_t i = begin; i < end; ++i) {
                       const SparsifyParams params{
                           .p = p, .seed = TrialSeed(options.master_seed, batch, i)};
                       record.trials[i] = EstimateTriangles(g, params, options.counter);
                     }
                   });
    for (const Estimate& e : record.trials) {
      report.total_seconds += e.sparsify_seconds + e.count_seconds;
    }
    report.total_trials += record.trials.size();
    const auto values = record.estimates();
    record.spread = exact ? 0.0 : RelativeSpread(values);
    record.concentrated = exact || record.spread <= options.spread_threshold;
    const bool done = record.concentrated;
    if (done) {
      report.p_star = p;
      report.final_estimate = record.mean();
    }
    report.trace.push_back(std::move(record));
    if (done) break;
    p *= 2.0;
  }
  report.wall_seconds = wall.Elapsed();
  return report;
}

}  // namespace trispar
