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

#include "trispar/generators.h"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "trispar/random.h"

namespace trispar {
namespace {

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T ParseField(std::string_view tok, std::string_view spec) {
  T value{};
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("bad generator parameter '" + std::string(tok) +
                                "' in '" + std::string(spec) + "'");
  }
  return value;
}

void RequirePositive(std::uint64_t value, const char* what) {
  if (value == 0) throw std::invalid_argument(std::string(what) + " must be positive");
}

std::vector<Edge> BookEdges(std::uint32_t spokes) {
  std::vector<Edge> edges;
  edges.reserve(2 * std::size_t{spokes} + 1);
  edges.push_back({0, 1});
  for (VertexId s = 2; s < spokes + 2; ++s) edges.push_back({0, s});
  for (VertexId s = 2; s < spokes + 2; ++s) edges.push_back({1, s});
  return edges;
}

struct GenerateVisitor {
  std::uint64_t seed;

  Graph operator()(const BookSpec& s) const {
    RequirePositive(s.spokes, "book size");
    return Graph::FromCanonicalEdges(s.spokes + 2, BookEdges(s.spokes));
  }

  Graph operator()(const WeightedBookSpec& s) const {
    RequirePositive(s.spokes, "book size");
    if (!(s.heavy_weight > 0.0)) throw std::invalid_argument("weight must be positive");
    std::vector<Edge> edges = BookEdges(s.spokes);
    std::vector<double> weights(edges.size(), 1.0);
    // Edges (0,2) and (1,2): index 1 and index spokes + 1.
    weights[1] = s.heavy_weight;
    weights[s.spokes + 1] = s.heavy_weight;
    return Graph::FromCanonicalEdges(s.spokes + 2, std::move(edges), std::move(weights));
  }

  Graph operator()(const GnpSpec& s) const {
    RequirePositive(s.num_vertices, "vertex count");
    if (!(s.edge_probability >= 0.0 && s.edge_probability <= 1.0)) {
      throw std::invalid_argument("edge probability must lie in [0, 1]");
    }
    Rng rng(seed);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < s.num_vertices; ++u) {
      for (VertexId v = u + 1; v < s.num_vertices; ++v) {
        if (UniformUnit(rng) < s.edge_probability) edges.push_back({u, v});
      }
    }
    return Graph::FromCanonicalEdges(s.num_vertices, std::move(edges));
  }

  Graph operator()(const CompleteSpec& s) const {
    RequirePositive(s.num_vertices, "vertex count");
    std::vector<Edge> edges;
    for (VertexId u = 0; u < s.num_vertices; ++u) {
      for (VertexId v = u + 1; v < s.num_vertices; ++v) edges.push_back({u, v});
    }
    return Graph::FromCanonicalEdges(s.num_vertices, std::move(edges));
  }
};

}  // namespace

GeneratorSpec ParseGeneratorSpec(std::string_view text) {
  const std::vector<std::string_view> parts = Split(text, ':');
  const std::string_view model = parts.front();
  auto expect_arity = [&](std::size_t n) {
    if (parts.size() != n + 1) {
      throw std::invalid_argument("generator '" + std::string(model) + "' takes " +
                                  std::to_string(n) + " parameter(s): '" +
                                  std::string(text) + "'");
    }
  };
  if (model == "book") {
    expect_arity(1);
    return BookSpec{ParseField<std::uint32_t>(parts[1], text)};
  }
  if (model == "weighted_book") {
    expect_arity(2);
    return WeightedBookSpec{ParseField<std::uint32_t>(parts[1], text),
                            ParseField<double>(parts[2], text)};
  }
  if (model == "gnp") {
    expect_arity(2);
    return GnpSpec{ParseField<std::uint32_t>(parts[1], text),
                   ParseField<double>(parts[2], text)};
  }
  if (model == "complete") {
    expect_arity(1);
    return CompleteSpec{ParseField<std::uint32_t>(parts[1], text)};
  }
  throw std::invalid_argument("unknown generator model '" + std::string(model) + "'");
}

namespace {

std::string ShortestDouble(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

}  // namespace

std::string ToString(const GeneratorSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, BookSpec>) {
          out << "book:" << s.spokes;
        } else if constexpr (std::is_same_v<T, WeightedBookSpec>) {
          out << "weighted_book:" << s.spokes << ':' << ShortestDouble(s.heavy_weight);
        } else if constexpr (std::is_same_v<T, GnpSpec>) {
          out << "gnp:" << s.num_vertices << ':' << ShortestDouble(s.edge_probability);
        } else {
          out << "complete:" << s.num_vertices;
        }
      },
      spec);
  return out.str();
}

Graph Generate(const GeneratorSpec& spec, std::uint64_t seed) {
  return std::visit(GenerateVisitor{seed}, spec);
}

}  // namespace trispar
