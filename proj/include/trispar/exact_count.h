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

#ifndef TRISPAR_EXACT_COUNT_H_
#define TRISPAR_EXACT_COUNT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "trispar/graph.h"

namespace trispar {

enum class Counter { kNodeIterator, kEdgeIterator };

// "node" or "edge"; throws std::invalid_argument otherwise.
Counter ParseCounter(std::string_view name);
std::string_view CounterName(Counter counter);

struct CountOptions {
  // Fill TriangleStats::delta_per_edge and delta_max.
  bool per_edge = false;
  // Worker threads; 0 selects available parallelism. Results do not depend
  // on this value.
  int threads = 1;
};

struct TriangleStats {
  std::uint64_t triangles = 0;
  // Indexed by EdgeId; empty unless CountOptions::per_edge.
  std::vector<std::uint64_t> delta_per_edge;
  // Largest per-edge triangle count; set only with CountOptions::per_edge.
  std::optional<std::uint64_t> delta_max;
  // 3t / (number of connected triples), 0 when there are none.
  double transitivity = 0.0;
};

// Both counters orient every edge from the endpoint that is lower in
// (degree, id) order and count each triangle once, at its lowest vertex.
//
// Node iterator: for each vertex, test every pair of its higher-ranked
// neighbors for adjacency by binary search. Cost grows with the sum of
// squared forward degrees.
TriangleStats CountNodeIterator(const Graph& g, const CountOptions& options = {});

// Edge iterator: for each oriented edge, merge the forward neighbor lists of
// its endpoints and count the common vertices.
TriangleStats CountEdgeIterator(const Graph& g, const CountOptions& options = {});

TriangleStats CountTriangles(const Graph& g, Counter counter,
                             const CountOptions& options = {});

inline constexpr VertexId kDefaultBruteForceLimit = 1000;

// Tests all C(n,3) vertex triples against a dense adjacency matrix. Throws
// std::invalid_argument when n exceeds `max_vertices`.
std::uint64_t CountBruteForce(const Graph& g,
                              VertexId max_vertices = kDefaultBruteForceLimit);

// Vertex triples classified by the number of edges they induce.
struct TripleCensus {
  std::uint64_t t0 = 0;
  std::uint64_t t1 = 0;
  std::uint64_t t2 = 0;
  std::uint64_t t3 = 0;

  friend bool operator==(const TripleCensus&, const TripleCensus&) = default;
};

// Closed form from degrees, m, n and the triangle count:
//   T2 = P2 - 3t,  T1 = m(n-2) - 2 T2 - 3t,  T0 = C(n,3) - T1 - T2 - T3.
// Exact for n up to about 4.8 million (C(n,3) must fit in 64 bits).
TripleCensus ComputeTripleCensus(const Graph& g, std::uint64_t triangles);
TripleCensus ComputeTripleCensus(const Graph& g);

double Transitivity(const Graph& g);

struct Triangle {
  VertexId a = 0, b = 0, c = 0;
  EdgeId ab = 0, ac = 0, bc = 0;
};

// Visits every triangle once, in an unspecified but deterministic order.
void ForEachTriangle(const Graph& g, const std::function<void(const Triangle&)>& fn);

std::uint64_t Choose2(std::uint64_t n);
std::uint64_t Choose3(std::uint64_t n);

}  // namespace trispar

#endif  // TRISPAR_EXACT_COUNT_H_
