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


#ifndef SPATHS_TESTS_TEST_UTIL_H_
#define SPATHS_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spaths/graph.h"

namespace spaths::testing {

// Edges labelled (weight, delay): s=1, u=2, v=3, s'=4, bound 5.
inline constexpr char kG2Text[] =
    "4 4 5\n"
    "1 2 2 1\n"
    "1 3 1 5\n"
    "2 3 1 1\n"
    "3 4 1 1\n";

// u0..u4 = 1..5; u1 sits on two 2-cycles and leads to u4.
inline constexpr char kG3Text[] =
    "5 6 0\n"
    "1 2 1 0\n"
    "2 3 1 0\n"
    "3 2 1 0\n"
    "2 4 1 0\n"
    "4 2 1 0\n"
    "2 5 1 0\n";

inline constexpr char kK1Text[] = "2 1 0\n1 2 7 2\n";

inline ProblemInstance G2() { return ParseInstance(kG2Text); }
inline ProblemInstance G3() { return ParseInstance(kG3Text); }
inline ProblemInstance K1() { return ParseInstance(kK1Text); }

struct RandomGraphSpec {
  Vertex min_vertices = 1;
  Vertex max_vertices = 10;
  // Edge count is drawn from [0, min(max_edges, edge_factor * n, n(n-1))].
  std::int64_t max_edges = 30;
  double edge_factor = 3.0;
  int max_weight = 20;
  Delay max_delay = 0;
};

inline Graph RandomGraph(std::mt19937_64& rng, const RandomGraphSpec& spec) {
  const Vertex n = std::uniform_int_distribution<Vertex>(
      spec.min_vertices, spec.max_vertices)(rng);
  Graph g(n);
  const std::int64_t cap = std::min<std::int64_t>(
      {spec.max_edges, static_cast<std::int64_t>(spec.edge_factor * n),
       static_cast<std::int64_t>(n) * (n - 1)});
  const std::int64_t m =
      std::uniform_int_distribution<std::int64_t>(0, std::max<std::int64_t>(cap, 0))(rng);
  std::uniform_int_distribution<Vertex> vertex(1, n);
  std::uniform_int_distribution<int> weight(0, spec.max_weight);
  std::uniform_int_distribution<Delay> delay(0, spec.max_delay);
  while (g.num_edges() < m) {
    const Vertex u = vertex(rng);
    const Vertex v = vertex(rng);
    if (u == v || g.HasEdge(u, v)) continue;
    g.AddEdge(u, v, weight(rng), delay(rng));
  }
  return g;
}

inline Weight PathWeight(const Graph& g, const std::vector<Vertex>& path) {
  Weight total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    bool found = false;
    for (const Edge& e : g.OutEdges(path[i])) {
      if (e.to == path[i + 1]) {
        total += e.weight;
        found = true;
        break;
      }
    }
    if (!found) return -1;  // not a walk of g
  }
  return total;
}

inline Delay PathDelay(const Graph& g, const std::vector<Vertex>& path) {
  Delay total = 0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    bool found = false;
    for (const Edge& e : g.OutEdges(path[i])) {
      if (e.to == path[i + 1]) {
        total += e.delay;
        found = true;
        break;
      }
    }
    if (!found) return -1;
  }
  return total;
}

}  // namespace spaths::testing

#endif  // SPATHS_TESTS_TEST_UTIL_H_
