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

#ifndef TRISPAR_SPARSIFY_H_
#define TRISPAR_SPARSIFY_H_

#include <cstdint>
#include <vector>

#include "trispar/exact_count.h"
#include "trispar/graph.h"

namespace trispar {

struct SparsifyParams {
  // Retention probability in (0, 1]; an edge is deleted with 1 - p.
  double p = 1.0;
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument unless 0 < p <= 1.
void Validate(const SparsifyParams& params);

// The uniform draws that decide survival: draws[e] is the e-th value of the
// stream seeded by `seed`, consumed in canonical edge order. Edge e survives
// at rate p iff draws[e] < p, so for a fixed seed the kept set grows
// monotonically with p.
std::vector<double> SurvivalDraws(EdgeId num_edges, std::uint64_t seed);

// Keeps every edge independently with probability p. The vertex set is
// unchanged. The output is unweighted; the uniform 1/p reweighting is
// applied by the estimator. Throws on weighted input (use WeightedSparsify).
Graph Sparsify(const Graph& g, const SparsifyParams& params);

// Same coin flips as Sparsify; surviving edges carry old weight / p.
Graph WeightedSparsify(const Graph& g, const SparsifyParams& params);

// T = t' / p^3.
double ScaleTriangleCount(std::uint64_t sparsified_triangles, double p);

struct Estimate {
  SparsifyParams params;
  std::uint64_t surviving_edges = 0;
  std::uint64_t t_prime = 0;
  double estimate = 0.0;
  double sparsify_seconds = 0.0;
  double count_seconds = 0.0;
};

// Sparsifies, counts t' exactly on the sample and scales by 1/p^3. The two
// phases are timed separately.
Estimate EstimateTriangles(const Graph& g, const SparsifyParams& params,
                           Counter counter = Counter::kNodeIterator,
                           int threads = 1);

// How a weighted triangle contributes to the weighted total.
enum class WeightConvention { kProduct, kSum };
inline constexpr WeightConvention kDefaultWeightConvention = WeightConvention::kProduct;

// Sum over triangles of the triangle's value under `convention`. Equals the
// plain triangle count on unit weights for kProduct (3t for kSum).
double CountWeightedTriangles(const Graph& g,
                              WeightConvention convention = kDefaultWeightConvention);

struct WeightedEstimate {
  SparsifyParams params;
  std::uint64_t surviving_edges = 0;
  double estimate = 0.0;
};

// Unbiased estimate of CountWeightedTriangles(g) from one weighted
// sparsification. Under kProduct the reweighted sample is counted as is;
// under kSum each surviving triangle carries sum(w)/p and the total is
// further scaled by 1/p^2.
WeightedEstimate EstimateWeightedTriangles(
    const Graph& g, const SparsifyParams& params,
    WeightConvention convention = kDefaultWeightConvention);

}  // namespace trispar

#endif  // TRISPAR_SPARSIFY_H_
