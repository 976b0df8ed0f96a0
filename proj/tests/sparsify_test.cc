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

#include <algorithm>
#include <cmath>
#include <vector>

#include "exhaustive.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "trispar/generators.h"
#include "trispar/random.h"
#include "trispar/sparsify.h"

namespace trispar {
namespace {

Graph Triangle() { return Graph::FromCanonicalEdges(3, {{0, 1}, {0, 2}, {1, 2}}); }

std::vector<Edge> EdgeVector(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

// Small random graphs with 1..16 edges and at least one triangle.
std::vector<Graph> SmallTriangleGraphs(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> graphs;
  while (static_cast<int>(graphs.size()) < count) {
    const auto n = static_cast<std::uint32_t>(4 + UniformBelow(rng, 5));
    const Graph g = Generate(GnpSpec{n, 0.3 + 0.5 * UniformUnit(rng)}, rng());
    if (g.num_edges() > 16 || CountNodeIterator(g).triangles == 0) continue;
    graphs.push_back(g);
  }
  return graphs;
}

TEST(SparsifyTest, FullRetentionKeepsEveryEdge) {
  const Graph g = Generate(GnpSpec{80, 0.2}, 1);
  const Graph s = Sparsify(g, {.p = 1.0, .seed = 99});
  EXPECT_EQ(EdgeVector(s), EdgeVector(g));
  EXPECT_EQ(s.num_vertices(), g.num_vertices());
}

TEST(SparsifyTest, SurvivorCountMatchesBinomialMean) {
  const Graph g = Generate(CompleteSpec{100});
  const int seeds = 200;
  double sum = 0;
  for (int s = 0; s < seeds; ++s) sum += Sparsify(g, {.p = 0.5, .seed = DeriveSeed(7, s)}).num_edges();
  const double mean = sum / seeds;
  const double standard_error = std::sqrt(4950 * 0.25 / seeds);
  EXPECT_LT(std::abs(mean - 0.5 * 4950), 5 * standard_error);
}

TEST(SparsifyTest, DeterministicForFixedSeed) {
  const Graph g = Generate(GnpSpec{200, 0.1}, 2);
  EXPECT_EQ(EdgeVector(Sparsify(g, {0.3, 5})), EdgeVector(Sparsify(g, {0.3, 5})));
  EXPECT_NE(EdgeVector(Sparsify(g, {0.3, 5})), EdgeVector(Sparsify(g, {0.3, 6})));
}

TEST(SparsifyTest, KeepsASubsetOfEdgesAndAllVertices) {
  const Graph g = Generate(GnpSpec{120, 0.1}, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph s = Sparsify(g, {0.4, seed});
    EXPECT_EQ(s.num_vertices(), g.num_vertices());
    for (const Edge& e : s.edges()) EXPECT_TRUE(g.has_edge(e.u, e.v));
  }
}

TEST(SparsifyTest, SurvivalIsDecidedByTheEdgesOwnDraw) {
  const Graph g = Generate(GnpSpec{100, 0.1}, 4);
  const std::vector<double> draws = SurvivalDraws(g.num_edges(), 21);
  for (double p : {0.1, 0.35, 0.8}) {
    const Graph s = Sparsify(g, {p, 21});
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
      EXPECT_EQ(s.has_edge(g.edge(id).u, g.edge(id).v), draws[id] < p);
    }
  }
}

TEST(SparsifyTest, KeptSetsAreNestedInP) {
  const Graph g = Generate(GnpSpec{150, 0.1}, 5);
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    double p1 = UniformUnit(rng), p2 = UniformUnit(rng);
    if (p1 > p2) std::swap(p1, p2);
    p1 = std::max(p1, 1e-3);
    p2 = std::max(p2, 1e-3);
    const std::uint64_t seed = rng();
    const Graph small = Sparsify(g, {p1, seed});
    const Graph large = Sparsify(g, {p2, seed});
    for (const Edge& e : small.edges()) EXPECT_TRUE(large.has_edge(e.u, e.v));
  }
}

TEST(SparsifyTest, RejectsInvalidP) {
  const Graph g = Generate(CompleteSpec{4});
  EXPECT_THROW(Sparsify(g, {0.0, 1}), std::invalid_argument);
  EXPECT_THROW(Sparsify(g, {1.5, 1}), std::invalid_argument);
  EXPECT_THROW(Sparsify(g, {-0.5, 1}), std::invalid_argument);
  EXPECT_THROW(Sparsify(g, {std::nan(""), 1}), std::invalid_argument);
  EXPECT_THROW(EstimateTriangles(g, {0.0, 1}), std::invalid_argument);
  EXPECT_THROW(Sparsify(Generate(WeightedBookSpec{3, 2}), {0.5, 1}), std::invalid_argument);
}

TEST(EstimateTest, ExactAtFullRetention) {
  const Estimate e = EstimateTriangles(Generate(CompleteSpec{4}), {1.0, 0});
  EXPECT_EQ(e.estimate, 4.0);
  EXPECT_EQ(e.t_prime, 4u);
  EXPECT_EQ(e.surviving_edges, 6u);
  EXPECT_GE(e.sparsify_seconds, 0.0);
  EXPECT_GE(e.count_seconds, 0.0);
}

TEST(EstimateTest, SingleTriangleIsAllOrNothing) {
  const Graph g = Triangle();
  // Exhaustively: only the all-kept pattern (probability 1/8) yields 8.
  long double p_eight = 0;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const double est =
        ScaleTriangleCount(CountNodeIterator(testing::SubgraphByMask(g, mask)).triangles, 0.5);
    EXPECT_TRUE(est == 0.0 || est == 8.0);
    if (est == 8.0) p_eight += testing::PatternProbability(std::popcount(mask), 3, 0.5);
  }
  EXPECT_DOUBLE_EQ(static_cast<double>(p_eight), 0.125);

  const int seeds = 4000;
  int eights = 0;
  for (int s = 0; s < seeds; ++s) {
    const double est = EstimateTriangles(g, {0.5, DeriveSeed(3, s)}).estimate;
    ASSERT_TRUE(est == 0.0 || est == 8.0);
    eights += est == 8.0;
  }
  const double se = std::sqrt(0.125 * 0.875 / seeds);
  EXPECT_LT(std::abs(eights / static_cast<double>(seeds) - 0.125), 5 * se);
}

TEST(EstimateTest, BookLosesEverythingWithTheHubEdge) {
  const Graph g = Generate(BookSpec{1000});
  const int seeds = 2000;
  int zeros = 0;
  for (int s = 0; s < seeds; ++s) {
    const Estimate e = EstimateTriangles(g, {0.1, DeriveSeed(11, s)});
    const bool hub_kept = Sparsify(g, e.params).has_edge(0, 1);
    if (!hub_kept) EXPECT_EQ(e.estimate, 0.0);
    zeros += e.estimate == 0.0;
  }
  // P(zero) = 0.9 + 0.1 * (1 - 0.01)^1000.
  const double expected = 0.9 + 0.1 * std::pow(0.99, 1000);
  const double se = std::sqrt(expected * (1 - expected) / seeds);
  EXPECT_LT(std::abs(zeros / static_cast<double>(seeds) - expected), 5 * se);
}

TEST(EstimateTest, CountersGiveTheSameEstimate) {
  const Graph g = Generate(GnpSpec{300, 0.1}, 6);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    EXPECT_EQ(EstimateTriangles(g, {0.3, seed}, Counter::kNodeIterator).estimate,
              EstimateTriangles(g, {0.3, seed}, Counter::kEdgeIterator).estimate);
  }
}

TEST(EstimateTest, UnbiasedOverAllSurvivalPatterns) {
  for (const Graph& g : SmallTriangleGraphs(8, 31)) {
    const double t = static_cast<double>(testing::EnumerateTriangles(g));
    for (double p : {0.3, 0.5, 0.7}) {
      const long double mean = testing::SparsifiedEstimateMean(g, p);
      EXPECT_NEAR(static_cast<double>(mean), t, 1e-9 * t) << "p=" << p;
    }
  }
}

TEST(WeightedSparsifyTest, FullRetentionKeepsWeights) {
  const Graph g = Generate(WeightedBookSpec{6, 50});
  const Graph s = WeightedSparsify(g, {1.0, 4});
  ASSERT_EQ(s.num_edges(), g.num_edges());
  EXPECT_TRUE(std::equal(s.weights().begin(), s.weights().end(), g.weights().begin()));
}

TEST(WeightedSparsifyTest, SurvivorsAreReweightedByOneOverP) {
  const Graph g = Graph::FromCanonicalEdges(2, {{0, 1}}, std::vector<double>{50.0});
  for (std::uint64_t seed = 0;; ++seed) {
    const Graph s = WeightedSparsify(g, {0.25, seed});
    if (s.num_edges() == 1) {
      EXPECT_EQ(s.weight(0), 200.0);
      break;
    }
  }
}

TEST(WeightedSparsifyTest, SameCoinFlipsAsUnweighted) {
  const Graph g = Generate(WeightedBookSpec{40, 7});
  const Graph topology = Graph::FromCanonicalEdges(g.num_vertices(), EdgeVector(g));
  EXPECT_EQ(EdgeVector(WeightedSparsify(g, {0.4, 12})), EdgeVector(Sparsify(topology, {0.4, 12})));
  EXPECT_THROW(WeightedSparsify(topology, {0.4, 12}), std::invalid_argument);
  EXPECT_THROW(WeightedSparsify(g, {0.0, 12}), std::invalid_argument);
}

TEST(WeightedTrianglesTest, UnitWeightsCountTriangles) {
  const Graph g = Generate(GnpSpec{40, 0.3}, 2);
  std::vector<double> ones(g.num_edges(), 1.0);
  const Graph w = Graph::FromCanonicalEdges(g.num_vertices(), EdgeVector(g), ones);
  EXPECT_EQ(CountWeightedTriangles(w), static_cast<double>(CountNodeIterator(g).triangles));
  EXPECT_EQ(CountWeightedTriangles(g), static_cast<double>(CountNodeIterator(g).triangles));
}

TEST(WeightedTrianglesTest, ProductConventionOnOneTriangle) {
  const Graph g = Graph::FromCanonicalEdges(3, {{0, 1}, {0, 2}, {1, 2}},
                                            std::vector<double>{1, 1, 37});
  EXPECT_EQ(CountWeightedTriangles(g, WeightConvention::kProduct), 37.0);
  EXPECT_EQ(CountWeightedTriangles(g, WeightConvention::kSum), 39.0);
}

TEST(WeightedTrianglesTest, MatchesEnumerationOnWeightedBook) {
  const Graph g = Generate(WeightedBookSpec{5, 10});
  EXPECT_DOUBLE_EQ(CountWeightedTriangles(g, WeightConvention::kProduct),
                   testing::EnumerateWeightedTriangles(g, true));
  EXPECT_DOUBLE_EQ(CountWeightedTriangles(g, WeightConvention::kSum),
                   testing::EnumerateWeightedTriangles(g, false));
  EXPECT_DOUBLE_EQ(CountWeightedTriangles(g), 100.0 + 4.0);
}

TEST(WeightedEstimateTest, UnbiasedOverAllSurvivalPatterns) {
  const Graph g = Generate(WeightedBookSpec{4, 6});  // 9 edges
  for (WeightConvention c : {WeightConvention::kProduct, WeightConvention::kSum}) {
    const double exact = CountWeightedTriangles(g, c);
    for (double p : {0.3, 0.5, 0.7}) {
      EXPECT_NEAR(static_cast<double>(testing::WeightedEstimateMean(g, p, c)), exact,
                  1e-9 * exact);
    }
  }
}

TEST(WeightedEstimateTest, MonteCarloMeanMatchesWeightedTotal) {
  const Graph g = Generate(WeightedBookSpec{10, 50});
  const double exact = testing::EnumerateWeightedTriangles(g, true);
  const int seeds = 500;
  std::vector<double> values;
  for (int s = 0; s < seeds; ++s) {
    values.push_back(EstimateWeightedTriangles(g, {0.5, DeriveSeed(1, s)}).estimate);
  }
  double mean = 0;
  for (double v : values) mean += v;
  mean /= seeds;
  double var = 0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= seeds - 1;
  EXPECT_LT(std::abs(mean - exact), 5 * std::sqrt(var / seeds));
}

}  // namespace
}  // namespace trispar
