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

#include "trispar/edge_list.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

namespace trispar {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits off the next whitespace-delimited token; empty when exhausted.
std::string_view NextToken(std::string_view& rest) {
  std::size_t b = 0;
  while (b < rest.size() && IsSpace(rest[b])) ++b;
  std::size_t e = b;
  while (e < rest.size() && !IsSpace(rest[e])) ++e;
  std::string_view tok = rest.substr(b, e - b);
  rest.remove_prefix(e);
  return tok;
}

template <typename T>
bool ParseNumber(std::string_view tok, T& out) {
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

LoadedGraph ParseEdgeList(std::istream& in, bool weighted) {
  LoadedGraph result;
  std::unordered_map<std::int64_t, VertexId> compact;
  std::vector<Edge> edges;
  std::vector<double> weights;

  auto intern = [&](std::int64_t label, std::size_t line_no) {
    auto [it, inserted] =
        compact.try_emplace(label, static_cast<VertexId>(result.original_ids.size()));
    if (inserted) {
      if (result.original_ids.size() >= std::numeric_limits<VertexId>::max()) {
        throw EdgeListError("too many vertices", line_no);
      }
      result.original_ids.push_back(label);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = line;
    std::string_view first = NextToken(rest);
    if (first.empty() || first.front() == '#' || first.front() == '%') continue;
    std::string_view second = NextToken(rest);
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (!ParseNumber(first, a) || second.empty() || !ParseNumber(second, b)) {
      throw EdgeListError("malformed edge on line " + std::to_string(line_no),
                          line_no);
    }
    double w = 1.0;
    if (weighted) {
      std::string_view third = NextToken(rest);
      if (!third.empty() && !ParseNumber(third, w)) {
        throw EdgeListError("malformed weight on line " + std::to_string(line_no),
                            line_no);
      }
      if (w < 0.0) {
        throw EdgeListError("negative weight on line " + std::to_string(line_no),
                            line_no);
      }
      if (!(w > 0.0)) {
        throw EdgeListError("zero weight on line " + std::to_string(line_no),
                            line_no);
      }
    }
    const VertexId u = intern(a, line_no);
    const VertexId v = intern(b, line_no);
    edges.push_back({u, v});
    if (weighted) weights.push_back(w);
  }
  if (in.bad()) throw EdgeListError("read error", line_no);

  const auto n = static_cast<VertexId>(result.original_ids.size());
  if (weighted) {
    result.graph = Graph::FromEdges(n, edges, std::span<const double>(weights));
  } else {
    result.graph = Graph::FromEdges(n, edges);
  }
  return result;
}

LoadedGraph LoadEdgeList(const std::filesystem::path& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw EdgeListError("cannot open " + path.string(), 0);
  return ParseEdgeList(in, weighted);
}

void WriteEdgeList(const Graph& g, std::ostream& out,
                   std::span<const std::int64_t> labels) {
  auto label = [&](VertexId v) -> std::int64_t {
    return labels.empty() ? std::int64_t{v} : labels[v];
  };
  const auto old_precision = out.precision(17);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    out << label(e.u) << ' ' << label(e.v);
    if (g.is_weighted()) out << ' ' << g.weight(id);
    out << '\n';
  }
  out.precision(old_precision);
}

void WriteEdgeList(const Graph& g, const std::filesystem::path& path,
                   std::span<const std::int64_t> labels) {
  std::ofstream out(path);
  if (!out) throw EdgeListError("cannot write " + path.string(), 0);
  WriteEdgeList(g, out, labels);
  if (!out) throw EdgeListError("write failed for " + path.string(), 0);
}

}  // namespace trispar
