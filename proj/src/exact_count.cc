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

#include "trispar/exact_count.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "parallel.h"

namespace trispar {
namespace {

// Forward adjacency: for each vertex, the neighbors ranked above it in
// (degree, id) order, sorted by id, with the connecting edge ids.
class Oriented {
 public:
  explicit Oriented(const Graph& g) : offsets_(std::size_t{g.num_vertices()} + 1, 0) {
    const VertexId n = g.num_vertices();
    auto above = [&](VertexId v, VertexId u) {
      const auto dv = g.degree(v), du = g.degree(u);
      return du > dv || (du == dv && u > v);
    };
    for (VertexId v = 0; v < n; ++v) {
      std::uint64_t count = 0;
      for (VertexId u : g.neighbors(v)) count += above(v, u);
      offsets_[v + 1] = offsets_[v] + count;
    }
    targets_.resize(offsets_[n]);
    edge_ids_.resize(offsets_[n]);
    for (VertexId v = 0; v < n; ++v) {
      auto pos = offsets_[v];
      auto nbrs = g.neighbors(v);
      auto ids = g.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (!above(v, nbrs[i])) continue;
        targets_[pos] = nbrs[i];
        edge_ids_[pos++] = ids[i];
      }
    }
  }

  std::span<const VertexId> targets(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeId> edge_ids(VertexId v) const {
    return {edge_ids_.data() + offsets_[v], edge_ids_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> targets_;
  std::vector<EdgeId> edge_ids_;
};

constexpr std::size_t kVertexChunk = 256;

// Per-worker partial results, merged in worker order.
struct Partial {
  std::uint64_t triangles = 0;
  std::vector<std::uint64_t> delta;
};

TriangleStats Merge(const Graph& g, std::vector<Partial>& parts, bool per_edge) {
  TriangleStats stats;
  for (const Partial& p : parts) stats.triangles += p.triangles;
  if (per_edge) {
    stats.delta_per_edge = std::move(parts.front().delta);
    for (std::size_t w = 1; w < parts.size(); ++w) {
      for (std::size_t e = 0; e < stats.delta_per_edge.size(); ++e) {
        stats.delta_per_edge[e] += parts[w].delta[e];
      }
    }
    stats.delta_max = stats.delta_per_edge.empty()
                          ? 0
                          : *std::max_element(stats.delta_per_edge.begin(),
                                              stats.delta_per_edge.end());
  }
  const std::uint64_t wedges = ConnectedTriples(g);
  stats.transitivity =
      wedges == 0 ? 0.0
                  : 3.0 * static_cast<double>(stats.triangles) / static_cast<double>(wedges);
  return stats;
}

template <typename Body>
TriangleStats RunCounter(const Graph& g, const CountOptions& options, Body body) {
  const Oriented fwd(g);
  const int threads = ResolveThreads(options.threads);
  std::vector<Partial> parts(static_cast<std::size_t>(threads));
  if (options.per_edge) {
    for (Partial& p : parts) p.delta.assign(g.num_edges(), 0);
  }
  ParallelChunks(g.num_vertices(), threads, kVertexChunk,
                 [&](int worker, std::size_t begin, std::size_t end) {
                   Partial& part = parts[static_cast<std::size_t>(worker)];
                   for (std::size_t v = begin; v < end; ++v) {
                     body(fwd, static_cast<VertexId>(v), part, options.per_edge);
                   }
                 });
  return Merge(g, parts, options.per_edge);
}

}  // namespace

Counter ParseCounter(std::string_view name) {
  if (name == "node") return Counter::kNodeIterator;
  if (name == "edge") return Counter::kEdgeIterator;
  throw std::invalid_argument("unknown counter '" + std::string(name) + "'");
}

std::string_view CounterName(Counter counter) {
  return counter == Counter::kNodeIterator ? "node" : "edge";
}

TriangleStats CountNodeIterator(const Graph& g, const CountOptions& options) {
  return RunCounter(g, options,
                    [&g](const Oriented& fwd, VertexId v, Partial& part, bool per_edge) {
                      auto nbrs = fwd.targets(v);
                      auto ids = fwd.edge_ids(v);
                      for (std::size_t i = 0; i < nbrs.size(); ++i) {
                        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                          const auto closing = g.edge_id(nbrs[i], nbrs[j]);
                          if (!closing) continue;
                          ++part.triangles;
                          if (per_edge) {
                            ++part.delta[ids[i]];
                            ++part.delta[ids[j]];
                            ++part.delta[*closing];
                          }
                        }
                      }
                    });
}

TriangleStats CountEdgeIterator(const Graph& g, const CountOptions& options) {
  return RunCounter(g, options,
                    [](const Oriented& fwd, VertexId v, Partial& part, bool per_edge) {
                      auto v_nbrs = fwd.targets(v);
                      auto v_ids = fwd.edge_ids(v);
                      for (std::size_t k = 0; k < v_nbrs.size(); ++k) {
                        const VertexId u = v_nbrs[k];
                        auto u_nbrs = fwd.targets(u);
                        auto u_ids = fwd.edge_ids(u);
                        std::size_t i = 0, j = 0;
                        while (i < v_nbrs.size() && j < u_nbrs.size()) {
                          if (v_nbrs[i] < u_nbrs[j]) {
                            ++i;
                          } else if (u_nbrs[j] < v_nbrs[i]) {
                            ++j;
                          } else {
                            ++part.triangles;
                            if (per_edge) {
                              ++part.delta[v_ids[k]];
                              ++part.delta[v_ids[i]];
                              ++part.delta[u_ids[j]];
                            }
                            ++i;
                            ++j;
                          }
                        }
                      }
                    });
}

TriangleStats CountTriangles(const Graph& g, Counter counter, const CountOptions& options) {
  return counter == Counter::kNodeIterator ? CountNodeIterator(g, options)
                                           : CountEdgeIterator(g, options);
}

std::uint64_t CountBruteForce(const Graph& g, VertexId max_vertices) {
  const std::size_t n = g.num_vertices();
  if (n > max_vertices) {
    throw std::invalid_argument("brute-force counting limited to " +
                                std::to_string(max_vertices) + " vertices, graph has " +
                                std::to_string(n));
  }
  std::vector<char> adj(n * n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u * n + e.v] = 1;
    adj[e.v * n + e.u] = 1;
  }
  std::uint64_t total = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        total += adj[a * n + b] && adj[a * n + c] && adj[b * n + c];
      }
    }
  }
  return total;
}

std::uint64_t Choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

std::uint64_t Choose3(std::uint64_t n) {
  if (n < 3) return 0;
  const unsigned __int128 wide =
      static_cast<unsigned __int128>(n) * (n - 1) * (n - 2) / 6;
  return static_cast<std::uint64_t>(wide);
}

TripleCensus ComputeTripleCensus(const Graph& g, std::uint64_t triangles) {
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t m = g.num_edges();
  TripleCensus c;
  c.t3 = triangles;
  c.t2 = ConnectedTriples(g) - 3 * triangles;
  c.t1 = (n < 2 ? 0 : m * (n - 2)) - 2 * c.t2 - 3 * c.t3;
  c.t0 = Choose3(n) - c.t1 - c.t2 - c.t3;
  return c;
}

TripleCensus ComputeTripleCensus(const Graph& g) {
  return ComputeTripleCensus(g, CountEdgeIterator(g).triangles);
}

double Transitivity(const Graph& g) { return CountEdgeIterator(g).transitivity; }

void ForEachTriangle(const Graph& g, const std::function<void(const Triangle&)>& fn) {
  const Oriented fwd(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto v_nbrs = fwd.targets(v);
    auto v_ids = fwd.edge_ids(v);
    for (std::size_t k = 0; k < v_nbrs.size(); ++k) {
      const VertexId u = v_nbrs[k];
      auto u_nbrs = fwd.targets(u);
      auto u_ids = fwd.edge_ids(u);
      std::size_t i = 0, j = 0;
      while (i < v_nbrs.size() && j < u_nbrs.size()) {
        if (v_nbrs[i] < u_nbrs[j]) {
          ++i;
        } else if (u_nbrs[j] < v_nbrs[i]) {
          ++j;
        } else {
          fn(Triangle{v, u, v_nbrs[i], v_ids[k], v_ids[i], u_ids[j]});
          ++i;
          ++j;
        }
      }
    }
  }
}

}  // namespace trispar
