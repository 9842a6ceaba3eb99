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


#ifndef SPATHS_KSP_H_
#define SPATHS_KSP_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "spaths/graph.h"

namespace spaths {

// A walk: vertices may repeat.
struct WeightedPath {
  Weight weight = 0;
  std::vector<Vertex> vertices;

  std::size_t num_edges() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }

  friend bool operator==(const WeightedPath&, const WeightedPath&) = default;
};

struct KspOptions {
  // When set, only walks ending at this vertex are emitted; every popped walk
  // is still extended as long as the target stays reachable from its end.
  std::optional<Vertex> target;
  // Upper bound on frontier pops. In target mode the number of walks lighter
  // than the k-th source->target walk can be exponential, or infinite when a
  // zero-weight cycle is reachable, so callers facing untrusted input should
  // set this. Unset means no limit.
  std::optional<std::int64_t> max_pops;
};

// Thrown when KspOptions::max_pops is reached before the search finishes.
class KspLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Best-first enumeration of the k lightest non-empty walks leaving `source`.
// Frontier walks are stored whole; equal weights pop in lexicographic vertex
// order. Returns fewer than k walks once the frontier is exhausted.
// Throws std::invalid_argument when k == 0 or a vertex is out of range.
std::vector<WeightedPath> KShortestPaths(const Graph& graph, Vertex source,
                                         std::int64_t k,
                                         const KspOptions& options = {});

}  // namespace spaths

#endif  // SPATHS_KSP_H_
