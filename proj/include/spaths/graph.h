// Copyright 2026 The spaths Authors.
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

#ifndef SPATHS_GRAPH_H_
#define SPATHS_GRAPH_H_

#include <cstdint>
#include <istream>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spaths {

// Vertices are 1-based; 0 is reserved for "no vertex".
using Vertex = std::int32_t;
using Weight = double;
using Delay = std::int64_t;

inline constexpr Vertex kNoVertex = 0;
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::infinity();

struct Edge {
  Vertex to = kNoVertex;
  Weight weight = 0;
  Delay delay = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Dense per-vertex storage addressed by 1-based vertex ids.
template <typename T>
class VertexArray {
 public:
  VertexArray() = default;
  VertexArray(std::size_t n, const T& value) : values_(n, value) {}

  T& operator[](Vertex v) { return values_[static_cast<std::size_t>(v - 1)]; }
  const T& operator[](Vertex v) const {
    return values_[static_cast<std::size_t>(v - 1)];
  }

  std::size_t size() const { return values_.size(); }
  std::span<const T> values() const { return values_; }
  const std::vector<T>& vector() const { return values_; }

  void assign(std::size_t n, const T& value) { values_.assign(n, value); }

  friend bool operator==(const VertexArray&, const VertexArray&) = default;

 private:
  std::vector<T> values_;
};

// Directed graph without self-loops or parallel edges. Out-edges are kept in
// insertion order. Edge weights are non-negative and delays are non-negative
// integers.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex num_vertices);

  // Throws std::invalid_argument when the edge would break an invariant.
  void AddEdge(Vertex from, Vertex to, Weight weight, Delay delay = 0);

  Vertex num_vertices() const { return num_vertices_; }
  std::int64_t num_edges() const { return num_edges_; }

  bool Contains(Vertex v) const { return v >= 1 && v <= num_vertices_; }
  bool HasEdge(Vertex from, Vertex to) const;

  std::span<const Edge> OutEdges(Vertex v) const {
    return adjacency_[static_cast<std::size_t>(v - 1)];
  }

  // Computed by a full edge scan; nothing is cached.
  std::vector<Vertex> InNeighbors(Vertex v) const;

  Weight MaxWeight() const;
  Weight MeanWeight() const;
  Delay TotalDelay() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex num_vertices_ = 0;
  std::int64_t num_edges_ = 0;
  std::vector<std::vector<Edge>> adjacency_;
};

struct ProblemInstance {
  Graph graph;
  Delay bound = 0;

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Text format:
//   n m [b]
//   u v w [d]      (m lines)
// Blank lines and lines starting with '#' are skipped.
ProblemInstance ParseInstance(std::istream& in);
ProblemInstance ParseInstance(std::string_view text);
ProblemInstance LoadInstance(const std::string& path);

std::string FormatInstance(const ProblemInstance& instance);

struct AugmentedGraph {
  Graph graph;
  Vertex sink = kNoVertex;  // the copy of the split source
};

// Adds vertex n+1 and redirects every edge (v, source) to (v, n+1), so that
// non-empty closed walks through `source` become source -> sink paths.
AugmentedGraph AugmentSource(const Graph& graph, Vertex source);

// Shortest decimal text that parses back to the same double.
std::string FormatWeight(Weight w);

}  // namespace spaths

#endif  // SPATHS_GRAPH_H_
