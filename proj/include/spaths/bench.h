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


#ifndef SPATHS_BENCH_H_
#define SPATHS_BENCH_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spaths/graph.h"
#include "spaths/timing.h"

namespace spaths {

enum class BenchTask {
  kShortestPath = 1,     // dijkstra, bf, bf-yen, delta
  kConstrainedPath = 2,  // dijkstra, bellman-ford
};

struct BenchConfig {
  std::string graph_path;
  BenchTask task = BenchTask::kShortestPath;
  std::int64_t sample_size = 30;
  std::int64_t runs = 50;
  std::uint64_t seed = 0;
  std::string output_path;
  // Empty selects every default algorithm of the task.
  std::vector<std::string> algorithms;
  std::optional<Weight> delta;
  std::optional<Delay> bound;
};

struct TimingRecord {
  std::string algorithm;
  Vertex source = kNoVertex;
  Vertex target = kNoVertex;
  std::int64_t run = 0;
  PhaseTimings timings;
  Weight path_weight = kInfinity;
  std::optional<Delay> path_delay;
};

inline constexpr char kCsvHeader[] =
    "algorithm,source,target,run,preprocessing_ns,computation_ns,total_ns,"
    "path_weight,path_delay";

// Uniform sample of `count` distinct vertices of 1..n, deterministic in seed.
std::vector<Vertex> SampleVertices(Vertex n, std::int64_t count,
                                   std::uint64_t seed);

std::vector<std::string> DefaultAlgorithms(BenchTask task);
// Default set plus optional extras (bf-yen-random for the shortest-path task).
std::vector<std::string> SupportedAlgorithms(BenchTask task);

// Times every selected algorithm on every ordered pair of distinct sampled
// vertices, `runs` times each. Algorithms run one after another; nothing is
// interleaved or parallel.
std::vector<TimingRecord> CollectTimings(const ProblemInstance& instance,
                                         const BenchConfig& config);

void WriteCsv(std::ostream& out, const std::vector<TimingRecord>& records);

// Loads the graph, collects timings and writes the CSV to config.output_path.
std::vector<TimingRecord> RunBenchmark(const BenchConfig& config);

}  // namespace spaths

#endif  // SPATHS_BENCH_H_
