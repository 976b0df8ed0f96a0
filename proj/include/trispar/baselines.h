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

#ifndef TRISPAR_BASELINES_H_
#define TRISPAR_BASELINES_H_

#include <cstdint>

#include "trispar/exact_count.h"
#include "trispar/graph.h"

namespace trispar {

// Trials r needed for a (1 +- epsilon) estimate with probability >= 1 - delta.
struct SampleBudget {
  double epsilon = 0;
  double delta = 0;
  std::uint64_t r = 0;
};

// Triple sampling: r uniform triples of distinct vertices, estimate
// C(n,3) * (hits / r). Throws std::invalid_argument when n < 3 or r == 0.
double NaiveSample(const Graph& g, std::uint64_t r, std::uint64_t seed, int threads = 1);

// Edge + node sampling: r draws of a uniform edge (i,j) and a uniform vertex
// k outside {i,j}; a hit needs both (i,k) and (k,j). Estimate
// (hits / r) * m (n - 2) / 3. The three passes over an edge stream are
// replaced by direct lookups. Throws std::invalid_argument when m == 0,
// n < 3 or r == 0.
double BuriolSample(const Graph& g, std::uint64_t r, std::uint64_t seed, int threads = 1);

// Single-trial outcomes and the scale factors that turn a hit rate into a
// triangle estimate. Averaging a trial over its whole sample space and
// multiplying by the scale gives the estimator's exact expectation.
bool NaiveTrialHits(const Graph& g, VertexId a, VertexId b, VertexId c);
double NaiveScale(const Graph& g);
bool BuriolTrialHits(const Graph& g, EdgeId edge, VertexId k);
double BuriolScale(const Graph& g);

// r = ceil(log(1/delta) / epsilon^2 * (1 + (T0 + T1 + T2) / T3)).
// Throws std::domain_error when T3 == 0: triple sampling cannot work then.
SampleBudget NaiveBudget(const TripleCensus& census, double epsilon, double delta);

// Same formula expressed through the triangle density T3 / C(n,3), for
// graphs too large to census: the bracket equals 1 / density.
SampleBudget NaiveBudgetForDensity(double triangle_density, double epsilon, double delta);

// r = ceil(log(1/delta) * 2 / epsilon^2 * (3 + (T1 + 2 T2) / T3)).
SampleBudget BuriolBudget(const TripleCensus& census, double epsilon, double delta);

}  // namespace trispar

#endif  // TRISPAR_BASELINES_H_
