// Copyright 2026 the hosoya-tools authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hosoya {

/// Thrown by parse_edge_list; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Undirected simple graph over vertices 0..n-1. Neighbor lists are kept
/// sorted; loops and duplicate edges are rejected at insertion, so every
/// instance is symmetric and simple by construction.
class Graph {
 public:
  explicit Graph(int vertex_count) {
    if (vertex_count < 0)
      throw std::invalid_argument("vertex count must be non-negative");
    adj_.resize(static_cast<std::size_t>(vertex_count));
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edges_; }

  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (has_edge(u, v)) throw std::invalid_argument("duplicate edge rejected");
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    ++edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("vertex index out of range");
  }
  static void insert_sorted(std::vector<int>& list, int v) {
    list.insert(std::lower_bound(list.begin(), list.end(), v), v);
  }

  std::vector<std::vector<int>> adj_;
  std::size_t edges_ = 0;
};

/// True when the graph has one connected component (vacuously for n = 0).
inline bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : g.neighbors(queue[qi]))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
  return reached == n;
}

/// The unique 2-coloring of a connected bipartite graph as two sorted vertex
/// sets, the part containing vertex 0 first; std::nullopt when the graph has
/// an odd cycle.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("bipartition: empty graph");
  if (!is_connected(g))
    throw std::invalid_argument("bipartition: graph must be connected");
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{0};
  color[0] = 0;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int w : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(w)] < 0) {
        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
        queue.push_back(w);
      } else if (color[static_cast<std::size_t>(w)] ==
                 color[static_cast<std::size_t>(v)]) {
        return std::nullopt;
      }
    }
  }
  std::pair<std::vector<int>, std::vector<int>> parts;
  for (int v = 0; v < n; ++v)
    (color[static_cast<std::size_t>(v)] == 0 ? parts.first : parts.second)
        .push_back(v);
  return parts;
}

struct ParsedGraph {
  Graph graph;
  bool connected;
};

/// Parses the edge-list format: a header line "n m", then exactly m lines
/// "u v" with 0 <= u,v < n and u != v. Blank lines and lines whose first
/// non-space character is '#' are ignored. Malformed lines, out-of-range
/// indices, loops and duplicate edges are rejected with the line number.
inline ParsedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  auto next_payload = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos || line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  auto two_ints = [&](const std::string& payload, long long& a,
                      long long& b, const char* what) {
    std::istringstream ls(payload);
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError(line_no, std::string("malformed ") + what +
                                    " (expected two integers): '" + payload + "'");
  };

  std::string payload;
  if (!next_payload(payload)) throw ParseError(line_no, "missing header line");
  long long n = 0, m = 0;
  two_ints(payload, n, m, "header");
  if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
  if (n > (1 << 30)) throw ParseError(line_no, "vertex count too large");

  Graph g(static_cast<int>(n));
  for (long long e = 0; e < m; ++e) {
    if (!next_payload(payload))
      throw ParseError(line_no, "expected " + std::to_string(m) +
                                    " edges, found " + std::to_string(e));
    long long u = 0, v = 0;
    two_ints(payload, u, v, "edge");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError(line_no, "vertex index out of range [0, " +
                                    std::to_string(n) + ")");
    if (u == v) throw ParseError(line_no, "loop edge");
    try {
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "duplicate edge");
    }
  }
  if (next_payload(payload))
    throw ParseError(line_no, "unexpected content after last edge");
  bool connected = is_connected(g);
  return ParsedGraph{std::move(g), connected};
}

/// Serializes a graph in the edge-list format accepted by parse_edge_list,
/// one edge per line with u < v, in ascending order.
inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace hosoya
