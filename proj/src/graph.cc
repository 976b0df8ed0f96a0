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

#include "trispar/graph.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace trispar {

Graph Graph::FromEdges(VertexId num_vertices, std::span<const Edge> edges,
                       std::optional<std::span<const double>> weights) {
  if (weights && weights->size() != edges.size()) {
    throw std::invalid_argument("weight count does not match edge count");
  }
  // (canonical edge, input position); stable sort keeps first occurrence first.
  std::vector<std::pair<Edge, std::size_t>> canon;
  canon.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= num_vertices || v >= num_vertices) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + " " + std::to_string(v));
    }
    if (weights && !((*weights)[i] > 0.0)) {
      throw std::invalid_argument("edge weight must be positive");
    }
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    canon.push_back({Edge{u, v}, i});
  }
  std::stable_sort(canon.begin(), canon.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Edge> unique_edges;
  std::optional<std::vector<double>> unique_weights;
  if (weights) unique_weights.emplace();
  unique_edges.reserve(canon.size());
  for (std::size_t i = 0; i < canon.size(); ++i) {
    if (i > 0 && canon[i].first == canon[i - 1].first) continue;
    unique_edges.push_back(canon[i].first);
    if (weights) unique_weights->push_back((*weights)[canon[i].second]);
  }
  return FromCanonicalEdges(num_vertices, std::move(unique_edges),
                            std::move(unique_weights));
}

Graph Graph::FromCanonicalEdges(VertexId num_vertices, std::vector<Edge> edges,
                                std::optional<std::vector<double>> weights) {
  if (weights && weights->size() != edges.size()) {
    throw std::invalid_argument("weight count does not match edge count");
  }
  if (edges.size() > std::numeric_limits<EdgeId>::max()) {
    throw std::invalid_argument("too many edges");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u >= e.v || e.v >= num_vertices || (i > 0 && !(edges[i - 1] < e))) {
      throw std::invalid_argument("edges are not canonical and strictly sorted");
    }
    if (weights && !((*weights)[i] > 0.0)) {
      throw std::invalid_argument("edge weight must be positive");
    }
  }
  Graph g;
  g.num_vertices_ = num_vertices;
  g.edges_ = std::move(edges);
  if (weights) {
    g.weighted_ = true;
    g.weights_ = std::move(*weights);
  }
  g.BuildAdjacency();
  return g;
}

void Graph::BuildAdjacency() {
  offsets_.assign(std::size_t{num_vertices_} + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  neighbors_.resize(edges_.size() * 2);
  edge_ids_.resize(edges_.size() * 2);
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // In canonical order a vertex sees its lower neighbors (as e.v) and its
  // higher neighbors (as e.u) each in increasing order. Placing all lower
  // neighbors first yields sorted lists without a sort.
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    neighbors_[cursor[e.v]] = e.u;
    edge_ids_[cursor[e.v]++] = id;
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    neighbors_[cursor[e.u]] = e.v;
    edge_ids_[cursor[e.u]++] = id;
  }
}

std::optional<EdgeId> Graph::edge_id(VertexId u, VertexId v) const {
  if (u >= num_vertices_ || v >= num_vertices_ || u == v) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v);
  if (it == adj.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - adj.begin())];
}

GraphStats Stats(const Graph& g) {
  GraphStats s;
  s.num_vertices = g.num_vertices();
  s.num_edges = g.num_edges();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  if (g.num_vertices() > 0) s.degree_histogram.assign(s.max_degree + 1, 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    ++s.degree_histogram[g.degree(v)];
  }
  s.isolated_vertices = s.degree_histogram.empty() ? 0 : s.degree_histogram[0];
  return s;
}

std::uint64_t ConnectedTriples(const Graph& g) {
  std::uint64_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const std::uint64_t d = g.degree(v);
    if (d > 1) total += d * (d - 1) / 2;
  }
  return total;
}

}  // namespace trispar
