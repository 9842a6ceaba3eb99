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


#include "spaths/sssp.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace spaths {
namespace {

void CheckEndpoints(const Graph& graph, Vertex source,
                    std::optional<Vertex> target) {
  if (!graph.Contains(source)) {
    throw std::invalid_argument("source vertex out of range");
  }
  if (target && !graph.Contains(*target)) {
    throw std::invalid_argument("target vertex out of range");
  }
}

SsspResult InitResult(const Graph& graph, Vertex source) {
  const auto n = static_cast<std::size_t>(graph.num_vertices());
  SsspResult result;
  result.dist.assign(n, kInfinity);
  result.pred.assign(n, kNoVertex);
  result.dist[source] = 0;
  return result;
}

void AttachPath(SsspResult& result, Vertex source,
                std::optional<Vertex> target) {
  if (target && result.dist[*target] < kInfinity) {
    result.path = ReconstructPath(source, *target, result.pred);
  }
}

}  // namespace

std::vector<Vertex> ReconstructPath(Vertex source, Vertex target,
                                    const VertexArray<Vertex>& pred) {
  std::vector<Vertex> path;
  const std::size_t limit = pred.size();
  while (target != source) {
    if (target == kNoVertex || path.size() >= limit) {
      throw std::logic_error("broken predecessor chain");
    }
    path.push_back(target);
    target = pred[target];
  }
  path.push_back(source);
  std::reverse(path.begin(), path.end());
  return path;
}

SsspResult Dijkstra(const Graph& graph, Vertex source,
                    std::optional<Vertex> target) {
  PhaseClock clock;
  CheckEndpoints(graph, source, target);
  SsspResult result = InitResult(graph, source);
  using Entry = std::pair<Weight, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  heap.emplace(0, source);
  clock.EndPreprocessing();

  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (d > result.dist[u]) continue;  // stale entry
    if (target && u == *target) break;
    for (const Edge& e : graph.OutEdges(u)) {
      ++result.relax_attempts;
      if (Relax(u, e.to, e.weight, result.dist, result.pred)) {
        heap.emplace(result.dist[e.to], e.to);
      }
    }
  }
  clock.EndComputation();

  AttachPath(result, source, target);
  result.timings = clock.Finish();
  return result;
}

namespace {

void RunNaiveBellmanFord(const Graph& graph, SsspResult& result,
                         PhaseClock& clock) {
  clock.EndPreprocessing();
  const Vertex n = graph.num_vertices();
  for (Vertex pass = 1; pass < n; ++pass) {
    for (Vertex u = 1; u <= n; ++u) {
      for (const Edge& e : graph.OutEdges(u)) {
        ++result.relax_attempts;
        Relax(u, e.to, e.weight, result.dist, result.pred);
      }
    }
  }
}

// Yen's variant: edges are split into those going forward in the sweep order
// and those going backward. Forward edges are relaxed in increasing order,
// backward edges in decreasing order, so an improvement made during a sweep
// always lands on a vertex that the same sweep has yet to visit.
void RunYenBellmanFord(const Graph& graph, Vertex source,
                       std::optional<std::uint64_t> seed, SsspResult& result,
                       PhaseClock& clock) {
  const Vertex n = graph.num_vertices();
  const auto size = static_cast<std::size_t>(n);
  std::vector<Vertex> order(size);
  std::iota(order.begin(), order.end(), Vertex{1});
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  VertexArray<std::size_t> position(size, 0);
  for (std::size_t i = 0; i < size; ++i) position[order[i]] = i;

  VertexArray<std::vector<Edge>> forward(size, {});
  VertexArray<std::vector<Edge>> backward(size, {});
  for (Vertex u = 1; u <= n; ++u) {
    for (const Edge& e : graph.OutEdges(u)) {
      (position[u] < position[e.to] ? forward : backward)[u].push_back(e);
    }
  }

  // to_relax: vertices whose distance changed during the previous half-pass.
  // queued: vertices whose distance changed during the current one.
  VertexArray<char> to_relax(size, 0);
  VertexArray<char> queued(size, 0);
  queued[source] = 1;
  clock.EndPreprocessing();

  bool relaxation = false;
  auto half_pass = [&](auto first, auto last,
                       const VertexArray<std::vector<Edge>>& edges) {
    for (auto it = first; it != last; ++it) {
      const Vertex u = *it;
      if (!to_relax[u] && !queued[u]) continue;
      for (const Edge& e : edges[u]) {
        ++result.relax_attempts;
        if (Relax(u, e.to, e.weight, result.dist, result.pred)) {
          queued[e.to] = 1;
          relaxation = true;
        }
      }
    }
    std::swap(to_relax, queued);
    queued.assign(size, 0);
  };

  do {
    relaxation = false;
    half_pass(order.begin(), order.end(), forward);
    half_pass(order.rbegin(), order.rend(), backward);
  } while (relaxation);
}

}  // namespace

SsspResult BellmanFord(const Graph& graph, Vertex source,
                       const BellmanFordOptions& options,
                       std::optional<Vertex> target) {
  PhaseClock clock;
  CheckEndpoints(graph, source, target);
  if (options.mode == BellmanFordMode::kYenRandom && !options.seed) {
    throw std::invalid_argument("randomized Bellman-Ford requires a seed");
  }
  SsspResult result = InitResult(graph, source);
  switch (options.mode) {
    case BellmanFordMode::kNaive:
      RunNaiveBellmanFord(graph, result, clock);
      break;
    case BellmanFordMode::kYen:
      RunYenBellmanFord(graph, source, std::nullopt, result, clock);
      break;
    case BellmanFordMode::kYenRandom:
      RunYenBellmanFord(graph, source, options.seed, result, clock);
      break;
  }
  clock.EndComputation();

  AttachPath(result, source, target);
  result.timings = clock.Finish();
  return result;
}

Weight DefaultDelta(const Graph& graph) {
  return std::max<Weight>(1, std::ceil(graph.MeanWeight()));
}

SsspResult DeltaStepping(const Graph& graph, Vertex source, Weight delta,
                         std::optional<Vertex> target) {
  PhaseClock clock;
  CheckEndpoints(graph, source, target);
  if (!(delta > 0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta must be a positive finite weight");
  }
  SsspResult result = InitResult(graph, source);
  const auto size = static_cast<std::size_t>(graph.num_vertices());
  VertexArray<std::vector<Edge>> light(size, {});
  VertexArray<std::vector<Edge>> heavy(size, {});
  for (Vertex u = 1; u <= graph.num_vertices(); ++u) {
    for (const Edge& e : graph.OutEdges(u)) {
      (e.weight <= delta ? light : heavy)[u].push_back(e);
    }
  }

  using Bucket = std::unordered_set<Vertex>;
  std::map<std::int64_t, Bucket> buckets;
  auto index_of = [delta](Weight d) {
    return static_cast<std::int64_t>(std::floor(d / delta));
  };
  auto relax_requests = [&](Vertex u, const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      ++result.relax_attempts;
      const Weight old = result.dist[e.to];
      if (!Relax(u, e.to, e.weight, result.dist, result.pred)) continue;
      if (old < kInfinity) {
        auto it = buckets.find(index_of(old));
        if (it != buckets.end()) {
          it->second.erase(e.to);
          if (it->second.empty()) buckets.erase(it);
        }
      }
      buckets[index_of(result.dist[e.to])].insert(e.to);
    }
  };
  buckets[0].insert(source);
  clock.EndPreprocessing();

  while (!buckets.empty()) {
    const std::int64_t i = buckets.begin()->first;
    Bucket settled;
    // Light edges may refill bucket i; drain it until it stays empty.
    for (auto it = buckets.find(i); it != buckets.end(); it = buckets.find(i)) {
      const std::vector<Vertex> frontier(it->second.begin(), it->second.end());
      buckets.erase(it);
      settled.insert(frontier.begin(), frontier.end());
      for (Vertex u : frontier) relax_requests(u, light[u]);
    }
    for (Vertex u : settled) relax_requests(u, heavy[u]);
    buckets.erase(i);
  }
  clock.EndComputation();

  AttachPath(result, source, target);
  result.timings = clock.Finish();
  return result;
}

}  // namespace spaths
