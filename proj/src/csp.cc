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


#include "spaths/csp.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace spaths {
namespace {

void CheckRequest(const ProblemInstance& instance, Vertex source,
                  Vertex target) {
  const Graph& g = instance.graph;
  if (!g.Contains(source)) {
    throw std::invalid_argument("source vertex out of range");
  }
  if (!g.Contains(target)) {
    throw std::invalid_argument("target vertex out of range");
  }
  if (source == target) {
    throw std::invalid_argument(
        "constrained search needs source != target; augment the source first");
  }
  if (instance.bound < 0) throw std::invalid_argument("negative delay bound");
}

}  // namespace

std::vector<Vertex> ReconstructConstrainedPath(const PredecessorMatrix& pred,
                                               Vertex source, Vertex target,
                                               Delay level) {
  std::vector<Vertex> path;
  const auto limit = static_cast<std::size_t>(pred.num_vertices()) *
                     static_cast<std::size_t>(pred.bound() + 1);
  DelayState state{target, level};
  while (state.vertex != source) {
    if (state.vertex == kNoVertex || path.size() >= limit) {
      throw std::logic_error("broken constrained predecessor chain");
    }
    path.push_back(state.vertex);
    state = pred(state.vertex, state.level);
  }
  path.push_back(source);
  std::reverse(path.begin(), path.end());
  return path;
}

CspResult ConstrainedBellmanFord(const ProblemInstance& instance,
                                 Vertex source, Vertex target,
                                 CspMatrix* matrix_out) {
  PhaseClock clock;
  CheckRequest(instance, source, target);
  const Graph& g = instance.graph;
  const Vertex n = g.num_vertices();
  const Delay bound = instance.bound;
  CspMatrix m{DelayMatrix<Weight>(n, bound, kInfinity),
              PredecessorMatrix(n, bound, DelayState{})};
  for (Delay level = 0; level <= bound; ++level) m.dist(source, level) = 0;
  clock.EndPreprocessing();

  // Edges with positive delay read finished lower columns; zero-delay edges
  // read the current column, hence the n-1 passes per column.
  for (Delay level = 0; level <= bound; ++level) {
    for (Vertex pass = 1; pass < n; ++pass) {
      for (Vertex u = 1; u <= n; ++u) {
        for (const Edge& e : g.OutEdges(u)) {
          if (e.delay > level) continue;
          const Delay from = level - e.delay;
          const Weight candidate = m.dist(u, from) + e.weight;
          if (candidate < m.dist(e.to, level)) {
            m.dist(e.to, level) = candidate;
            m.pred(e.to, level) = {u, from};
          }
        }
      }
    }
  }
  clock.EndComputation();

  CspResult result;
  result.weight = m.dist(target, bound);
  if (result.weight < kInfinity) {
    Delay level = bound;
    while (level > 0 && m.dist(target, level - 1) == result.weight) --level;
    result.delay = level;
    result.path = ReconstructConstrainedPath(m.pred, source, target, level);
  }
  if (matrix_out != nullptr) *matrix_out = std::move(m);
  result.timings = clock.Finish();
  return result;
}

CspResult ConstrainedDijkstra(const ProblemInstance& instance, Vertex source,
                              Vertex target, CspLabels* labels_out) {
  PhaseClock clock;
  CheckRequest(instance, source, target);
  const Graph& g = instance.graph;
  const Delay bound = instance.bound;
  CspLabels labels{DelayMatrix<Weight>(g.num_vertices(), bound, kInfinity),
                   PredecessorMatrix(g.num_vertices(), bound, DelayState{})};
  labels.dist(source, 0) = 0;

  // Distance first: with delay first, the first pop of the target would
  // minimise delay instead of weight.
  using Label = std::tuple<Weight, Delay, Vertex>;
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  queue.emplace(0, 0, source);
  clock.EndPreprocessing();

  CspResult result;
  while (!queue.empty()) {
    const auto [dist, level, u] = queue.top();
    queue.pop();
    if (u == target) {
      result.weight = dist;
      result.delay = level;
      break;
    }
    if (dist > labels.dist(u, level)) continue;  // stale label
    for (const Edge& e : g.OutEdges(u)) {
      const Delay delay = level + e.delay;
      if (delay > bound) continue;
      const Weight candidate = labels.dist(u, level) + e.weight;
      if (candidate < labels.dist(e.to, delay)) {
        labels.dist(e.to, delay) = candidate;
        labels.pred(e.to, delay) = {u, level};
        queue.emplace(candidate, delay, e.to);
      }
    }
  }
  clock.EndComputation();

  if (result.delay) {
    result.path =
        ReconstructConstrainedPath(labels.pred, source, target, *result.delay);
  }
  if (labels_out != nullptr) *labels_out = std::move(labels);
  result.timings = clock.Finish();
  return result;
}

}  // namespace spaths
