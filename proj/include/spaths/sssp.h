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


#ifndef SPATHS_SSSP_H_
#define SPATHS_SSSP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "spaths/graph.h"
#include "spaths/timing.h"

namespace spaths {

struct SsspResult {
  VertexArray<Weight> dist;
  VertexArray<Vertex> pred;
  // Present when a target was requested and reached.
  std::optional<std::vector<Vertex>> path;
  PhaseTimings timings;
  // Number of edge relaxations attempted by the main loop.
  std::int64_t relax_attempts = 0;
};

// Relaxes edge (u, v) of weight w. Returns true iff dist[u] + w < dist[v]
// held on entry, in which case dist[v] and pred[v] are updated.
inline bool Relax(Vertex u, Vertex v, Weight w, VertexArray<Weight>& dist,
                  VertexArray<Vertex>& pred) {
  const Weight candidate = dist[u] + w;
  if (candidate < dist[v]) {
    dist[v] = candidate;
    pred[v] = u;
    return true;
  }
  return false;
}

// Returns [source, ..., target] by walking the predecessor chain back from
// target. Throws std::logic_error if the chain is broken or cyclic.
std::vector<Vertex> ReconstructPath(Vertex source, Vertex target,
                                    const VertexArray<Vertex>& pred);

// Binary-heap Dijkstra with lazy deletion. Equal distances pop the smaller
// vertex first. With a target the search stops when the target is popped.
SsspResult Dijkstra(const Graph& graph, Vertex source,
                    std::optional<Vertex> target = std::nullopt);

enum class BellmanFordMode {
  kNaive,       // n-1 passes over every edge
  kYen,         // flagged vertices, forward/backward sweeps in id order
  kYenRandom,   // same sweeps under a seeded random vertex order
};

struct BellmanFordOptions {
  BellmanFordMode mode = BellmanFordMode::kNaive;
  // Required for kYenRandom.
  std::optional<std::uint64_t> seed;
};

SsspResult BellmanFord(const Graph& graph, Vertex source,
                       const BellmanFordOptions& options = {},
                       std::optional<Vertex> target = std::nullopt);

// Bucketed label-correcting search. Throws std::invalid_argument unless
// delta > 0.
SsspResult DeltaStepping(const Graph& graph, Vertex source, Weight delta,
                         std::optional<Vertex> target = std::nullopt);

// max(1, ceil(mean edge weight)).
Weight DefaultDelta(const Graph& graph);

}  // namespace spaths

#endif  // SPATHS_SSSP_H_
