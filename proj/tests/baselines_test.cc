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

#include <cmath>
#include <vector>

#include "exhaustive.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "trispar/baselines.h"
#include "trispar/generators.h"
#include "trispar/log_base.h"
#include "trispar/random.h"

namespace trispar {
namespace {

Graph TriangleFree() {
  // 6-cycle.
  return Graph::FromCanonicalEdges(6, {{0, 1}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

void ExpectMeanNear(const std::vector<double>& xs, double expected, double sigmas) {
  double mean = 0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size() - 1);
  EXPECT_LT(std::abs(mean - expected), sigmas * std::sqrt(var / xs.size()))
      << "mean " << mean << " expected " << expected;
}

TEST(NaiveSampleTest, CompleteGraphIsExact) {
  const Graph g = Generate(CompleteSpec{5});
  for (std::uint64_t r : {1ull, 17ull, 1000ull}) EXPECT_EQ(NaiveSample(g, r, r), 10.0);
}

TEST(NaiveSampleTest, TriangleFreeGivesZero) {
  EXPECT_EQ(NaiveSample(TriangleFree(), 5000, 1), 0.0);
}

TEST(NaiveSampleTest, MonteCarloMeanMatchesExact) {
  const Graph g = Generate(GnpSpec{50, 0.3}, 1);
  const double t = static_cast<double>(testing::EnumerateTriangles(g));
  std::vector<double> xs;
  for (int s = 0; s < 50; ++s) xs.push_back(NaiveSample(g, 100'000, DeriveSeed(2, s)));
  ExpectMeanNear(xs, t, 5);
}

TEST(BuriolSampleTest, CompleteFourIsExact) {
  const Graph g = Generate(CompleteSpec{4});
  for (std::uint64_t r : {1ull, 33ull, 500ull}) EXPECT_EQ(BuriolSample(g, r, r), 4.0);
}

TEST(BuriolSampleTest, TriangleFreeGivesZero) {
  EXPECT_EQ(BuriolSample(TriangleFree(), 5000, 1), 0.0);
}

TEST(BuriolSampleTest, MonteCarloMeanMatchesExact) {
  const Graph g = Generate(GnpSpec{60, 0.25}, 2);
  const double t = static_cast<double>(testing::EnumerateTriangles(g));
  std::vector<double> xs;
  for (int s = 0; s < 50; ++s) xs.push_back(BuriolSample(g, 100'000, DeriveSeed(3, s)));
  ExpectMeanNear(xs, t, 5);
}

TEST(BaselineSampleTest, ExhaustiveExpectationEqualsT) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::uint32_t>(3 + UniformBelow(rng, 5));
    const Graph g = Generate(GnpSpec{n, 0.2 + 0.7 * UniformUnit(rng)}, rng());
    const auto t = static_cast<long double>(testing::EnumerateTriangles(g));
    EXPECT_NEAR(static_cast<double>(testing::NaiveEstimateMean(g)), static_cast<double>(t), 1e-9);
    if (g.num_edges() > 0) {
      EXPECT_NEAR(static_cast<double>(testing::BuriolEstimateMean(g)), static_cast<double>(t),
                  1e-9);
    }
  }
}

TEST(BaselineSampleTest, EstimatesAreBounded) {
  const Graph g = Generate(GnpSpec{30, 0.5}, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const double naive = NaiveSample(g, 50, seed);
    const double buriol = BuriolSample(g, 50, seed);
    EXPECT_GE(naive, 0.0);
    EXPECT_LE(naive, NaiveScale(g));
    EXPECT_GE(buriol, 0.0);
    EXPECT_LE(buriol, BuriolScale(g));
  }
}

TEST(BaselineSampleTest, DeterministicAndThreadIndependent) {
  const Graph g = Generate(GnpSpec{100, 0.2}, 5);
  const std::uint64_t r = 300'000;
  EXPECT_EQ(NaiveSample(g, r, 8, 1), NaiveSample(g, r, 8, 1));
  EXPECT_EQ(NaiveSample(g, r, 8, 1), NaiveSample(g, r, 8, 4));
  EXPECT_EQ(BuriolSample(g, r, 8, 1), BuriolSample(g, r, 8, 3));
}

TEST(BaselineSampleTest, RejectsDegenerateInput) {
  EXPECT_THROW(NaiveSample(Generate(CompleteSpec{2}), 10, 0), std::invalid_argument);
  EXPECT_THROW(NaiveSample(Generate(CompleteSpec{5}), 0, 0), std::invalid_argument);
  EXPECT_THROW(BuriolSample(Graph::FromCanonicalEdges(5, {}), 10, 0), std::invalid_argument);
  EXPECT_THROW(BuriolSample(Generate(CompleteSpec{2}), 10, 0), std::invalid_argument);
}

TEST(BudgetTest, SingleTriangleSubstitution) {
  const TripleCensus one{0, 0, 0, 1};
  EXPECT_EQ(NaiveBudget(one, 0.1, 0.1).r, 231u);
  EXPECT_EQ(BuriolBudget(one, 0.1, 0.1).r, 1382u);
}

TEST(BudgetTest, CompleteGraphHasUnitBracket) {
  const TripleCensus c = ComputeTripleCensus(Generate(CompleteSpec{9}));
  EXPECT_EQ(c.t0 + c.t1 + c.t2, 0u);
  EXPECT_EQ(NaiveBudget(c, 0.2, 0.05).r,
            static_cast<std::uint64_t>(std::ceil(std::log(20.0) / 0.04)));
}

TEST(BudgetTest, WikipediaDensityIsInfeasible) {
  const double density = 6.25e-11;
  const SampleBudget b = NaiveBudgetForDensity(density, 0.1, 0.1);
  const double expected = std::log(10.0) / 0.01 * 1.6e10;
  EXPECT_NEAR(static_cast<double>(b.r), expected, 1e-9 * expected + 1);
  EXPECT_GT(b.r, 1'000'000'000'000ull);
}

TEST(BudgetTest, PathPlusTriangle) {
  // Path 0-1-2 and a disjoint triangle 3-4-5.
  const Graph g =
      Graph::FromCanonicalEdges(6, {{0, 1}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  const auto e = testing::EnumerateCensus(g);
  const TripleCensus c{e[0], e[1], e[2], e[3]};
  EXPECT_EQ(c.t3, 1u);
  EXPECT_EQ(c.t2, 1u);
  EXPECT_EQ(c, ComputeTripleCensus(g));
  const double factor = 3.0 + (static_cast<double>(c.t1) + 2.0 * c.t2) / c.t3;
  EXPECT_EQ(BuriolBudget(c, 0.1, 0.1).r,
            static_cast<std::uint64_t>(std::ceil(std::log(10.0) * 200 * factor)));
}

TEST(BudgetTest, BuriolBracketIsAtLeastThree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = Generate(GnpSpec{30, 0.3}, seed);
    const TripleCensus c = ComputeTripleCensus(g);
    if (c.t3 == 0) continue;
    EXPECT_GE(BuriolBudget(c, 0.1, 0.1).r,
              static_cast<std::uint64_t>(std::ceil(Log(10.0) * 200 * 3)) - 1);
  }
}

TEST(BudgetTest, RejectsTriangleFreeAndBadArguments) {
  const TripleCensus none{10, 5, 5, 0};
  EXPECT_THROW(NaiveBudget(none, 0.1, 0.1), std::domain_error);
  EXPECT_THROW(BuriolBudget(none, 0.1, 0.1), std::domain_error);
  const TripleCensus one{0, 0, 0, 1};
  EXPECT_THROW(NaiveBudget(one, 0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(NaiveBudget(one, 0.1, 1.0), std::invalid_argument);
  EXPECT_THROW(BuriolBudget(one, 0.1, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace trispar
