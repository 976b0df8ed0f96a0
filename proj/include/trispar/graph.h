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

#ifndef TRISPAR_GRAPH_H_
#define TRISPAR_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace trispar {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Undirected edge. Canonical form has u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph in CSR form.
//
// Edges are numbered 0..m-1 in canonical (u < v, lexicographic) order. Every
// adjacency slot carries the id of the edge it represents, so per-edge data
// (weights, triangle profiles, survival draws) is indexed by EdgeId.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from an arbitrary edge list. Direction is dropped,
  // self-loops are removed and duplicates collapse to their first occurrence
  // (which also decides the weight that is kept). Throws std::invalid_argument
  // on out-of-range endpoints, on a weight count mismatch and on non-positive
  // weights.
  static Graph FromEdges(VertexId num_vertices, std::span<const Edge> edges,
                         std::optional<std::span<const double>> weights = {});

  // Fast path for edges already canonical, strictly increasing and in range.
  // Preconditions are checked; violating them throws std::invalid_argument.
  static Graph FromCanonicalEdges(VertexId num_vertices,
                                  std::vector<Edge> edges,
                                  std::optional<std::vector<double>> weights = {});

  VertexId num_vertices() const { return num_vertices_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  // Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  bool has_edge(VertexId u, VertexId v) const { return edge_id(u, v).has_value(); }
  std::optional<EdgeId> edge_id(VertexId u, VertexId v) const;

  bool is_weighted() const { return weighted_; }
  std::span<const double> weights() const { return weights_; }
  // 1.0 for unweighted graphs.
  double weight(EdgeId e) const { return weights_.empty() ? 1.0 : weights_[e]; }

 private:
  void BuildAdjacency();

  VertexId num_vertices_ = 0;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::uint64_t> offsets_ = {0};
  std::vector<VertexId> neighbors_;
  std::vector<EdgeId> edge_ids_;
};

struct GraphStats {
  std::uint64_t num_vertices = 0;
  std::uint64_t num_edges = 0;
  std::uint32_t max_degree = 0;
  std::uint64_t isolated_vertices = 0;
  // degree_histogram[d] = number of vertices of degree d.
  std::vector<std::uint64_t> degree_histogram;
};

GraphStats Stats(const Graph& g);

// Number of length-2 paths, sum over v of C(deg(v), 2).
std::uint64_t ConnectedTriples(const Graph& g);

}  // namespace trispar

#endif  // TRISPAR_GRAPH_H_
