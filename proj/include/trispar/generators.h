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

#ifndef TRISPAR_GENERATORS_H_
#define TRISPAR_GENERATORS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "trispar/graph.h"

namespace trispar {

// Two hub vertices (0 and 1) joined by an edge, each joined to k common
// spoke vertices 2..k+1. Every triangle contains the hub-hub edge.
struct BookSpec {
  std::uint32_t spokes = 0;
};

// Book topology where the two hub-spoke edges of the first spoke (vertex 2)
// carry weight `heavy_weight` and all other edges weight 1. Losing either
// heavy edge erases the triangle that dominates the weighted total.
struct WeightedBookSpec {
  std::uint32_t spokes = 0;
  double heavy_weight = 1.0;
};

// Erdos-Renyi G(n, q).
struct GnpSpec {
  std::uint32_t num_vertices = 0;
  double edge_probability = 0.0;
};

struct CompleteSpec {
  std::uint32_t num_vertices = 0;
};

using GeneratorSpec = std::variant<BookSpec, WeightedBookSpec, GnpSpec, CompleteSpec>;

// Parses "book:K", "weighted_book:K:W", "gnp:N:Q" or "complete:N".
// Throws std::invalid_argument on unknown models or bad parameters.
GeneratorSpec ParseGeneratorSpec(std::string_view text);
std::string ToString(const GeneratorSpec& spec);

// Deterministic for fixed (spec, seed). Only gnp consumes randomness: one
// uniform draw per vertex pair in lexicographic order.
Graph Generate(const GeneratorSpec& spec, std::uint64_t seed = 0);

}  // namespace trispar

#endif  // TRISPAR_GENERATORS_H_
