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


#include "spaths/oracle.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

namespace spaths::oracle {
namespace {

void CheckSource(const Graph& graph, Vertex source) {
  if (!graph.Contains(source)) {
    throw std::invalid_argument("source vertex out of range");
  }
}

void CheckPathCap(const Graph& graph, const Limits& limits) {
  if (graph.num_vertices() > limits.max_path_vertices) {
    throw LimitExceeded("oracle path enumeration capped at " +
                        std::to_string(limits.max_path_vertices) +
                        " vertices");
  }
}

// Calls visit(v, weight, delay) for every simple path source -> v, including
// the empty path at the source.
template <typename Visit>
void ForEachSimplePath(const Graph& graph, Vertex source, Visit&& visit) {
  VertexArray<char> on_path(static_cast<std::size_t>(graph.num_vertices()), 0);
  std::function<void(Vertex, Weight, Delay)> dfs = [&](Vertex v, Weight w,
                                                       Delay d) {
    if (!visit(v, w, d)) return;
    on_path[v] = 1;
    for (const Edge& e : graph.OutEdges(v)) {
      if (!on_path[e.to]) dfs(e.to, w + e.weight, d + e.delay);
    }
    on_path[v] = 0;
  };
  dfs(source, 0, 0);
}

}  // namespace

VertexArray<Weight> ShortestDistances(const Graph& graph, Vertex source,
                                      const Limits& limits) {
  CheckSource(graph, source);
  CheckPathCap(graph, limits);
  VertexArray<Weight> best(static_cast<std::size_t>(graph.num_vertices()),
                           kInfinity);
  ForEachSimplePath(graph, source, [&](Vertex v, Weight w, Delay) {
    best[v] = std::min(best[v], w);
    return true;
  });
  return best;
}

ConstrainedOptimum ConstrainedShortest(const ProblemInstance& instance,
                                       Vertex source, Vertex target,
                                       const Limits& limits) {
  const Graph& graph = instance.graph;
  CheckSource(graph, source);
  CheckPathCap(graph, limits);
  if (!graph.Contains(target)) {
    throw std::invalid_argument("target vertex out of range");
  }
  ConstrainedOptimum best;
  ForEachSimplePath(graph, source, [&](Vertex v, Weight w, Delay d) {
    if (d > instance.bound) return false;
    if (v == target && v != source) {
      if (w < best.weight || (w == best.weight && best.delay && d < *best.delay)) {
        best.weight = w;
        best.delay = d;
      }
      return false;
    }
    return true;
  });
  return best;
}

std::vector<std::vector<Weight>> ConstrainedTable(
    const ProblemInstance& instance, Vertex source, const Limits& limits) {
  const Graph& graph = instance.graph;
  CheckSource(graph, source);
  CheckPathCap(graph, limits);
  const auto levels = static_cast<std::size_t>(instance.bound) + 1;
  std::vector<std::vector<Weight>> table(
      static_cast<std::size_t>(graph.num_vertices()) + 1,
      std::vector<Weight>(levels, kInfinity));
  ForEachSimplePath(graph, source, [&](Vertex v, Weight w, Delay d) {
    if (d > instance.bound) return false;
    auto& row = table[static_cast<std::size_t>(v)];
    for (auto level = static_cast<std::size_t>(d); level < levels; ++level) {
      row[level] = std::min(row[level], w);
    }
    return true;
  });
  return table;
}

std::vector<Weight> KLightestWalkWeights(const Graph& graph, Vertex source,
                                         std::int64_t k,
                                         const Limits& limits) {
  CheckSource(graph, source);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (graph.num_vertices() > limits.max_walk_vertices || k > limits.max_k) {
    throw LimitExceeded("oracle walk enumeration capped at n <= " +
                        std::to_string(limits.max_walk_vertices) +
                        ", k <= " + std::to_string(limits.max_k));
  }
  // Max-heap holding the k lightest weights seen so far.
  std::priority_queue<Weight> kept;
  std::function<void(Vertex, Weight, std::int64_t)> dfs =
      [&](Vertex v, Weight w, std::int64_t edges) {
        if (edges > 0) {
          if (static_cast<std::int64_t>(kept.size()) < k) {
            kept.push(w);
          } else if (w < kept.top()) {
            kept.pop();
            kept.push(w);
          }
        }
        if (edges == k) return;
        for (const Edge& e : graph.OutEdges(v)) {
          dfs(e.to, w + e.weight, edges + 1);
        }
      };
  dfs(source, 0, 0);
  std::vector<Weight> weights;
  while (!kept.empty()) {
    weights.push_back(kept.top());
    kept.pop();
  }
  std::reverse(weights.begin(), weights.end());
  return weights;
}

}  // namespace spaths::oracle
