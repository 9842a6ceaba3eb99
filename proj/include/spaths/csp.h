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


#ifndef SPATHS_CSP_H_
#define SPATHS_CSP_H_

#include <optional>
#include <vector>

#include "spaths/graph.h"
#include "spaths/timing.h"

namespace spaths {

// A state of the delay-expanded graph: vertex reached with delay level.
struct DelayState {
  Vertex vertex = kNoVertex;
  Delay level = 0;

  friend bool operator==(const DelayState&, const DelayState&) = default;
};

// n x (bound + 1) row-major matrix indexed by (vertex, delay level).
template <typename T>
class DelayMatrix {
 public:
  DelayMatrix() = default;
  DelayMatrix(Vertex num_vertices, Delay bound, const T& value)
      : levels_(static_cast<std::size_t>(bound) + 1),
        cells_(static_cast<std::size_t>(num_vertices) * levels_, value) {}

  T& operator()(Vertex v, Delay level) { return cells_[Index(v, level)]; }
  const T& operator()(Vertex v, Delay level) const {
    return cells_[Index(v, level)];
  }

  Delay bound() const { return static_cast<Delay>(levels_) - 1; }
  Vertex num_vertices() const {
    return levels_ == 0 ? 0 : static_cast<Vertex>(cells_.size() / levels_);
  }

 private:
  std::size_t Index(Vertex v, Delay level) const {
    return static_cast<std::size_t>(v - 1) * levels_ +
           static_cast<std::size_t>(level);
  }

  std::size_t levels_ = 0;
  std::vector<T> cells_;
};

using PredecessorMatrix = DelayMatrix<DelayState>;

// Budget semantics: dist(v, l) is the lightest s->v path with delay <= l.
struct CspMatrix {
  DelayMatrix<Weight> dist;
  PredecessorMatrix pred;
};

// Consumed-delay semantics: dist(v, l) is the lightest s->v path found with
// delay exactly l.
struct CspLabels {
  DelayMatrix<Weight> dist;
  PredecessorMatrix pred;
};

struct CspResult {
  Weight weight = kInfinity;
  std::optional<Delay> delay;
  std::optional<std::vector<Vertex>> path;
  PhaseTimings timings;

  bool feasible() const { return path.has_value(); }
};

// Column-by-column Bellman-Ford over the delay levels 0..bound. Reports the
// smallest level at which the optimal weight is reached.
// Requires source != target; see AugmentSource for closed paths.
CspResult ConstrainedBellmanFord(const ProblemInstance& instance,
                                 Vertex source, Vertex target,
                                 CspMatrix* matrix_out = nullptr);

// Label-setting search over (vertex, consumed delay) states, popped in
// (distance, delay, vertex) order. Returns on the first pop of target.
CspResult ConstrainedDijkstra(const ProblemInstance& instance, Vertex source,
                              Vertex target, CspLabels* labels_out = nullptr);

// Follows predecessor states from (target, level) back to source.
// Throws std::logic_error on a broken chain.
std::vector<Vertex> ReconstructConstrainedPath(const PredecessorMatrix& pred,
                                               Vertex source, Vertex target,
                                               Delay level);

}  // namespace spaths

#endif  // SPATHS_CSP_H_
