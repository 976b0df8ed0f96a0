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

#ifndef TRISPAR_EDGE_LIST_H_
#define TRISPAR_EDGE_LIST_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "trispar/graph.h"

namespace trispar {

class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(const std::string& what, std::size_t line)
      : std::runtime_error(what), line_(line) {}
  // 1-based line of the offending input, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A preprocessed graph plus the table mapping compact ids back to the ids
// found in the input: original_ids[v] is the input label of vertex v.
struct LoadedGraph {
  Graph graph;
  std::vector<std::int64_t> original_ids;
};

// Reads whitespace-separated "u v" (or "u v w" when weighted) lines. Lines
// starting with '#' or '%' and blank lines are skipped; extra columns are
// ignored for unweighted input. A missing weight defaults to 1. Vertex ids
// are compacted to 0..n-1 in order of first appearance.
LoadedGraph ParseEdgeList(std::istream& in, bool weighted);
LoadedGraph LoadEdgeList(const std::filesystem::path& path, bool weighted);

// Writes one canonical edge per line, with the weight as a third column for
// weighted graphs. When labels is non-empty vertex v is written as labels[v].
void WriteEdgeList(const Graph& g, std::ostream& out,
                   std::span<const std::int64_t> labels = {});
void WriteEdgeList(const Graph& g, const std::filesystem::path& path,
                   std::span<const std::int64_t> labels = {});

}  // namespace trispar

#endif  // TRISPAR_EDGE_LIST_H_
