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


#include "spaths/ksp.h"

#include <queue>
#include <stdexcept>
#include <string>

namespace spaths {
namespace {

struct HeavierFirst {
  bool operator()(const WeightedPath& a, const WeightedPath& b) const {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.vertices > b.vertices;
  }
};

// Vertices from which `target` can be reached (including target itself).
VertexArray<char> CanReach(const Graph& graph, Vertex target) {
  const auto n = static_cast<std::size_t>(graph.num_vertices());
  VertexArray<std::vector<Vertex>> reverse(n, {});
  for (Vertex u = 1; u <= graph.num_vertices(); ++u) {
    for (const Edge& e : graph.OutEdges(u)) reverse[e.to].push_back(u);
  }
  VertexArray<char> seen(n, 0);
  std::vector<Vertex> stack{target};
  seen[target] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : reverse[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<WeightedPath> KShortestPaths(const Graph& graph, Vertex source,
                                         std::int64_t k,
                                         const KspOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!graph.Contains(source)) {
    throw std::invalid_argument("source vertex out of range");
  }
  const auto target = options.target;
  if (target && !graph.Contains(*target)) {
    throw std::invalid_argument("target vertex out of range");
  }
  if (options.max_pops && *options.max_pops < 1) {
    throw std::invalid_argument("max_pops must be at least 1");
  }

  VertexArray<char> useful;
  if (target) useful = CanReach(graph, *target);

  std::vector<WeightedPath> emitted;
  std::priority_queue<WeightedPath, std::vector<WeightedPath>, HeavierFirst>
      frontier;
  if (!target || useful[source]) frontier.push({0, {source}});

  std::int64_t pops = 0;
  while (!frontier.empty() && static_cast<std::int64_t>(emitted.size()) < k) {
    if (options.max_pops && pops == *options.max_pops) {
      throw KspLimitExceeded("stopped after " + std::to_string(pops) +
                             " frontier pops with " +
                             std::to_string(emitted.size()) + " of " +
                             std::to_string(k) + " walks found");
    }
    ++pops;
    WeightedPath path = frontier.top();
    frontier.pop();
    const Vertex last = path.vertices.back();
    for (const Edge& e : graph.OutEdges(last)) {
      if (target && !useful[e.to]) continue;
      WeightedPath next = path;
      next.weight += e.weight;
      next.vertices.push_back(e.to);
      frontier.push(std::move(next));
    }
    if (path.num_edges() >= 1 && (!target || last == *target)) {
      emitted.push_back(std::move(path));
    }
  }
  return emitted;
}

}  // namespace spaths
