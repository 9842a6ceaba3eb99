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

#include "spaths/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

namespace spaths {

Graph::Graph(Vertex num_vertices) : num_vertices_(num_vertices) {
  if (num_vertices < 0) {
    throw std::invalid_argument("vertex count must be non-negative");
  }
  adjacency_.resize(static_cast<std::size_t>(num_vertices));
}

void Graph::AddEdge(Vertex from, Vertex to, Weight weight, Delay delay) {
  if (!Contains(from) || !Contains(to)) {
    throw std::invalid_argument("vertex id out of range");
  }
  if (from == to) throw std::invalid_argument("self-loop");
  if (!(weight >= 0) || !std::isfinite(weight)) {
    throw std::invalid_argument("negative or non-finite weight");
  }
  if (delay < 0) throw std::invalid_argument("negative delay");
  if (HasEdge(from, to)) throw std::invalid_argument("duplicate edge");
  adjacency_[static_cast<std::size_t>(from - 1)].push_back({to, weight, delay});
  ++num_edges_;
}

bool Graph::HasEdge(Vertex from, Vertex to) const {
  const auto edges = OutEdges(from);
  return std::any_of(edges.begin(), edges.end(),
                     [to](const Edge& e) { return e.to == to; });
}

std::vector<Vertex> Graph::InNeighbors(Vertex v) const {
  std::vector<Vertex> result;
  for (Vertex u = 1; u <= num_vertices_; ++u) {
    if (HasEdge(u, v)) result.push_back(u);
  }
  return result;
}

Weight Graph::MaxWeight() const {
  Weight best = 0;
  for (const auto& edges : adjacency_) {
    for (const Edge& e : edges) best = std::max(best, e.weight);
  }
  return best;
}

Weight Graph::MeanWeight() const {
  if (num_edges_ == 0) return 0;
  Weight sum = 0;
  for (const auto& edges : adjacency_) {
    for (const Edge& e : edges) sum += e.weight;
  }
  return sum / static_cast<Weight>(num_edges_);
}

Delay Graph::TotalDelay() const {
  Delay sum = 0;
  for (const auto& edges : adjacency_) {
    for (const Edge& e : edges) sum += e.delay;
  }
  return sum;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
T ParseNumber(std::string_view token, int line, const char* what) {
  T value{};
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("non-numeric ") + what + " '" +
                               std::string(token) + "'");
  }
  return value;
}

}  // namespace

ProblemInstance ParseInstance(std::istream& in) {
  ProblemInstance instance;
  bool have_header = false;
  std::int64_t expected_edges = 0;
  std::int64_t edges_read = 0;
  int line_number = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    const auto tokens = Tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!have_header) {
      if (tokens.size() < 2 || tokens.size() > 3) {
        throw ParseError(line_number, "malformed header, expected 'n m [b]'");
      }
      const auto n = ParseNumber<std::int64_t>(tokens[0], line_number,
                                               "vertex count");
      expected_edges =
          ParseNumber<std::int64_t>(tokens[1], line_number, "edge count");
      if (tokens.size() == 3) {
        instance.bound =
            ParseNumber<Delay>(tokens[2], line_number, "delay bound");
      }
      if (n < 1 || n > std::numeric_limits<Vertex>::max() - 1) {
        throw ParseError(line_number, "vertex count out of range");
      }
      if (expected_edges < 0) {
        throw ParseError(line_number, "negative edge count");
      }
      if (instance.bound < 0) {
        throw ParseError(line_number, "negative delay bound");
      }
      instance.graph = Graph(static_cast<Vertex>(n));
      have_header = true;
      continue;
    }

    if (edges_read == expected_edges) {
      throw ParseError(line_number, "more edge lines than declared");
    }
    if (tokens.size() < 3 || tokens.size() > 4) {
      throw ParseError(line_number, "malformed edge, expected 'u v w [d]'");
    }
    const auto u = ParseNumber<std::int64_t>(tokens[0], line_number, "vertex");
    const auto v = ParseNumber<std::int64_t>(tokens[1], line_number, "vertex");
    const auto w = ParseNumber<Weight>(tokens[2], line_number, "weight");
    const Delay d = tokens.size() == 4
                        ? ParseNumber<Delay>(tokens[3], line_number, "delay")
                        : 0;
    const Graph& g = instance.graph;
    if (u < 1 || u > g.num_vertices() || v < 1 || v > g.num_vertices()) {
      throw ParseError(line_number, "vertex id out of range");
    }
    if (!std::isfinite(w)) throw ParseError(line_number, "non-finite weight");
    if (w < 0) throw ParseError(line_number, "negative weight");
    if (d < 0) throw ParseError(line_number, "negative delay");
    if (u == v) throw ParseError(line_number, "self-loop");
    if (g.HasEdge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError(line_number, "duplicate edge");
    }
    instance.graph.AddEdge(static_cast<Vertex>(u), static_cast<Vertex>(v), w,
                           d);
    ++edges_read;
  }
  if (!have_header) throw ParseError(line_number, "missing header");
  if (edges_read != expected_edges) {
    throw ParseError(line_number, "expected " + std::to_string(expected_edges) +
                                      " edges, found " +
                                      std::to_string(edges_read));
  }
  return instance;
}

ProblemInstance ParseInstance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseInstance(in);
}

ProblemInstance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
  return ParseInstance(in);
}

std::string FormatWeight(Weight w) {
  if (std::isinf(w)) return "inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), w);
  return std::string(buffer, ptr);
}

std::string FormatInstance(const ProblemInstance& instance) {
  const Graph& g = instance.graph;
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << ' ' << instance.bound
      << '\n';
  for (Vertex u = 1; u <= g.num_vertices(); ++u) {
    for (const Edge& e : g.OutEdges(u)) {
      out << u << ' ' << e.to << ' ' << FormatWeight(e.weight) << ' '
          << e.delay << '\n';
    }
  }
  return out.str();
}

AugmentedGraph AugmentSource(const Graph& graph, Vertex source) {
  if (!graph.Contains(source)) {
    throw std::invalid_argument("source vertex out of range");
  }
  const Vertex sink = graph.num_vertices() + 1;
  AugmentedGraph result{Graph(sink), sink};
  for (Vertex u = 1; u <= graph.num_vertices(); ++u) {
    for (const Edge& e : graph.OutEdges(u)) {
      result.graph.AddEdge(u, e.to == source ? sink : e.to, e.weight, e.delay);
    }
  }
  return result;
}

}  // namespace spaths
