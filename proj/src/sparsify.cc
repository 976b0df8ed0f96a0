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

#include "trispar/sparsify.h"

#include <stdexcept>
#include <string>

#include "trispar/random.h"
#include "trispar/timer.h"

namespace trispar {
namespace {

// Runs the coin flips and returns the surviving canonical edges, plus their
// reweighted weights when `reweight` is set.
Graph Keep(const Graph& g, const SparsifyParams& params, bool reweight) {
  Validate(params);
  Rng rng(params.seed);
  std::vector<Edge> kept;
  std::vector<double> weights;
  kept.reserve(static_cast<std::size_t>(g.num_edges() * params.p * 1.1) + 16);
  const auto edges = g.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (UniformUnit(rng) < params.p) {
      kept.push_back(edges[e]);
      if (reweight) weights.push_back(g.weight(e) / params.p);
    }
  }
  if (reweight) {
    return Graph::FromCanonicalEdges(g.num_vertices(), std::move(kept), std::move(weights));
  }
  return Graph::FromCanonicalEdges(g.num_vertices(), std::move(kept));
}

}  // namespace

void Validate(const SparsifyParams& params) {
  if (!(params.p > 0.0 && params.p <= 1.0)) {
    throw std::invalid_argument("sparsification probability must lie in (0, 1], got " +
                                std::to_string(params.p));
  }
}

std::vector<double> SurvivalDraws(EdgeId num_edges, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> draws(num_edges);
  for (double& d : draws) d = UniformUnit(rng);
  return draws;
}

Graph Sparsify(const Graph& g, const SparsifyParams& params) {
  if (g.is_weighted()) {
    throw std::invalid_argument("Sparsify expects an unweighted graph; use WeightedSparsify");
  }
  return Keep(g, params, /*reweight=*/false);
}

Graph WeightedSparsify(const Graph& g, const SparsifyParams& params) {
  if (!g.is_weighted()) {
    throw std::invalid_argument("WeightedSparsify expects a weighted graph");
  }
  return Keep(g, params, /*reweight=*/true);
}

double ScaleTriangleCount(std::uint64_t sparsified_triangles, double p) {
  return static_cast<double>(sparsified_triangles) / (p * p * p);
}

Estimate EstimateTriangles(const Graph& g, const SparsifyParams& params, Counter counter,
                           int threads) {
  Estimate est;
  est.params = params;
  Stopwatch clock;
  const Graph sample = Sparsify(g, params);
  est.sparsify_seconds = clock.Lap();
  est.t_prime = CountTriangles(sample, counter, {.per_edge = false, .threads = threads}).triangles;
  est.count_seconds = clock.Lap();
  est.surviving_edges = sample.num_edges();
  est.estimate = ScaleTriangleCount(est.t_prime, params.p);
  return est;
}

double CountWeightedTriangles(const Graph& g, WeightConvention convention) {
  double total = 0.0;
  ForEachTriangle(g, [&](const Triangle& t) {
    const double a = g.weight(t.ab), b = g.weight(t.ac), c = g.weight(t.bc);
    total += convention == WeightConvention::kProduct ? a * b * c : a + b + c;
  });
  return total;
}

WeightedEstimate EstimateWeightedTriangles(const Graph& g, const SparsifyParams& params,
                                           WeightConvention convention) {
  const Graph sample = WeightedSparsify(g, params);
  WeightedEstimate est;
  est.params = params;
  est.surviving_edges = sample.num_edges();
  est.estimate = CountWeightedTriangles(sample, convention);
  if (convention == WeightConvention::kSum) est.estimate /= params.p * params.p;
  return est;
}

}  // namespace trispar
