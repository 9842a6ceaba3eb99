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


#ifndef SPATHS_ORACLE_H_
#define SPATHS_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "spaths/graph.h"

// Exhaustive reference implementations. They enumerate paths or walks by
// plain recursion and share no relaxation code with the real algorithms.
namespace spaths::oracle {

struct Limits {
  Vertex max_path_vertices = 12;  // simple-path enumeration
  Vertex max_walk_vertices = 8;   // walk enumeration
  std::int64_t max_k = 8;
};

class LimitExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Minimum weight over all simple source->v paths, +inf when none.
VertexArray<Weight> ShortestDistances(const Graph& graph, Vertex source,
                                      const Limits& limits = {});

struct ConstrainedOptimum {
  Weight weight = kInfinity;
  std::optional<Delay> delay;  // minimum delay among optimal-weight paths
};

// Minimum weight over all simple source->target paths with delay <= bound.
ConstrainedOptimum ConstrainedShortest(const ProblemInstance& instance,
                                       Vertex source, Vertex target,
                                       const Limits& limits = {});

// Lightest delay-feasible source->v weight for every v and every budget
// 0..bound, as a (vertex, budget) table.
std::vector<std::vector<Weight>> ConstrainedTable(
    const ProblemInstance& instance, Vertex source, const Limits& limits = {});

// The k smallest weights (with multiplicity, ascending) over all non-empty
// walks from source with at most k edges.
std::vector<Weight> KLightestWalkWeights(const Graph& graph, Vertex source,
                                         std::int64_t k,
                                         const Limits& limits = {});

}  // namespace spaths::oracle

#endif  // SPATHS_ORACLE_H_
