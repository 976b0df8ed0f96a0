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

#include "trispar/baselines.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "parallel.h"
#include "trispar/log_base.h"
#include "trispar/random.h"

namespace trispar {
namespace {

// Trials are grouped in fixed blocks with their own RNG stream, so the result
// depends on (seed, r) only, never on the worker count.
constexpr std::uint64_t kTrialBlock = 1 << 16;

template <typename Trial>
std::uint64_t CountHits(std::uint64_t r, std::uint64_t seed, int threads, Trial trial) {
  const std::uint64_t blocks = (r + kTrialBlock - 1) / kTrialBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  ParallelChunks(blocks, ResolveThreads(threads), 1,
                 [&](int, std::size_t begin, std::size_t end) {
                   for (std::size_t b = begin; b < end; ++b) {
                     Rng rng(DeriveSeed(seed, b));
                     const std::uint64_t count = std::min(kTrialBlock, r - b * kTrialBlock);
                     for (std::uint64_t i = 0; i < count; ++i) hits[b] += trial(rng);
                   }
                 });
  std::uint64_t total = 0;
  for (std::uint64_t h : hits) total += h;
  return total;
}

void ValidateBudgetArgs(double epsilon, double delta) {
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (!(delta > 0 && delta < 1)) throw std::invalid_argument("delta must lie in (0, 1)");
}

SampleBudget MakeBudget(double epsilon, double delta, double r) {
  return {.epsilon = epsilon, .delta = delta, .r = static_cast<std::uint64_t>(std::ceil(r))};
}

}  // namespace

bool NaiveTrialHits(const Graph& g, VertexId a, VertexId b, VertexId c) {
  return g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
}

double NaiveScale(const Graph& g) { return static_cast<double>(Choose3(g.num_vertices())); }

bool BuriolTrialHits(const Graph& g, EdgeId edge, VertexId k) {
  const Edge& e = g.edge(edge);
  return g.has_edge(e.u, k) && g.has_edge(k, e.v);
}

double BuriolScale(const Graph& g) {
  return static_cast<double>(g.num_edges()) * (g.num_vertices() - 2.0) / 3.0;
}

double NaiveSample(const Graph& g, std::uint64_t r, std::uint64_t seed, int threads) {
  const VertexId n = g.num_vertices();
  if (n < 3) throw std::invalid_argument("triple sampling needs n >= 3");
  if (r == 0) throw std::invalid_argument("need at least one trial");
  const std::uint64_t hits = CountHits(r, seed, threads, [&](Rng& rng) {
    const auto a = static_cast<VertexId>(UniformBelow(rng, n));
    VertexId b, c;
    do b = static_cast<VertexId>(UniformBelow(rng, n)); while (b == a);
    do c = static_cast<VertexId>(UniformBelow(rng, n)); while (c == a || c == b);
    return NaiveTrialHits(g, a, b, c);
  });
  return NaiveScale(g) * static_cast<double>(hits) / static_cast<double>(r);
}

double BuriolSample(const Graph& g, std::uint64_t r, std::uint64_t seed, int threads) {
  if (g.num_edges() == 0) throw std::invalid_argument("edge sampling needs m >= 1");
  if (g.num_vertices() < 3) throw std::invalid_argument("edge sampling needs n >= 3");
  if (r == 0) throw std::invalid_argument("need at least one trial");
  const std::uint64_t hits = CountHits(r, seed, threads, [&](Rng& rng) {
    const auto edge = static_cast<EdgeId>(UniformBelow(rng, g.num_edges()));
    const Edge& e = g.edge(edge);
    // Uniform over V \ {u, v}: draw from n - 2 slots and skip the endpoints.
    auto k = static_cast<VertexId>(UniformBelow(rng, g.num_vertices() - 2));
    if (k >= e.u) ++k;
    if (k >= e.v) ++k;
    return BuriolTrialHits(g, edge, k);
  });
  return BuriolScale(g) * static_cast<double>(hits) / static_cast<double>(r);
}

SampleBudget NaiveBudget(const TripleCensus& census, double epsilon, double delta) {
  ValidateBudgetArgs(epsilon, delta);
  if (census.t3 == 0) {
    throw std::domain_error("no triangles: triple sampling budget is unbounded");
  }
  const double others = static_cast<double>(census.t0) + static_cast<double>(census.t1) +
                        static_cast<double>(census.t2);
  const double factor = 1.0 + others / static_cast<double>(census.t3);
  return MakeBudget(epsilon, delta, Log(1.0 / delta) / (epsilon * epsilon) * factor);
}

SampleBudget NaiveBudgetForDensity(double triangle_density, double epsilon, double delta) {
  ValidateBudgetArgs(epsilon, delta);
  if (!(triangle_density > 0 && triangle_density <= 1)) {
    throw std::domain_error("triangle density must lie in (0, 1]");
  }
  return MakeBudget(epsilon, delta,
                    Log(1.0 / delta) / (epsilon * epsilon) / triangle_density);
}

SampleBudget BuriolBudget(const TripleCensus& census, double epsilon, double delta) {
  ValidateBudgetArgs(epsilon, delta);
  if (census.t3 == 0) {
    throw std::domain_error("no triangles: edge sampling budget is unbounded");
  }
  const double factor =
      3.0 + (static_cast<double>(census.t1) + 2.0 * static_cast<double>(census.t2)) /
                static_cast<double>(census.t3);
  return MakeBudget(epsilon, delta, Log(1.0 / delta) * 2.0 / (epsilon * epsilon) * factor);
}

}  // namespace trispar
