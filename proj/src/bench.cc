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


#include "spaths/bench.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "spaths/csp.h"
#include "spaths/sssp.h"

namespace spaths {

std::vector<Vertex> SampleVertices(Vertex n, std::int64_t count,
                                   std::uint64_t seed) {
  if (count < 0 || count > n) {
    throw std::invalid_argument("sample size must be between 0 and " +
                                std::to_string(n));
  }
  std::vector<Vertex> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), Vertex{1});
  std::mt19937_64 rng(seed);
  std::shuffle(vertices.begin(), vertices.end(), rng);
  vertices.resize(static_cast<std::size_t>(count));
  return vertices;
}

std::vector<std::string> DefaultAlgorithms(BenchTask task) {
  if (task == BenchTask::kShortestPath) {
    return {"dijkstra", "bf", "bf-yen", "delta"};
  }
  return {"dijkstra", "bellman-ford"};
}

std::vector<std::string> SupportedAlgorithms(BenchTask task) {
  auto names = DefaultAlgorithms(task);
  if (task == BenchTask::kShortestPath) names.push_back("bf-yen-random");
  return names;
}

namespace {

struct Outcome {
  PhaseTimings timings;
  Weight weight = kInfinity;
  std::optional<Delay> delay;
};

using Runner = std::function<Outcome(Vertex, Vertex)>;

Outcome FromSssp(const SsspResult& r, Vertex target) {
  return {r.timings, r.dist[target], std::nullopt};
}

Runner MakeRunner(const std::string& name, const ProblemInstance& instance,
                  const BenchConfig& config) {
  const Graph& g = instance.graph;
  if (config.task == BenchTask::kShortestPath) {
    if (name == "dijkstra") {
      return [&g](Vertex s, Vertex t) { return FromSssp(Dijkstra(g, s, t), t); };
    }
    if (name == "bf" || name == "bf-yen" || name == "bf-yen-random") {
      BellmanFordOptions options;
      options.mode = name == "bf"       ? BellmanFordMode::kNaive
                     : name == "bf-yen" ? BellmanFordMode::kYen
                                        : BellmanFordMode::kYenRandom;
      if (options.mode == BellmanFordMode::kYenRandom) {
        options.seed = config.seed;
      }
      return [&g, options](Vertex s, Vertex t) {
        return FromSssp(BellmanFord(g, s, options, t), t);
      };
    }
    if (name == "delta") {
      const Weight delta = config.delta.value_or(DefaultDelta(g));
      if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
      return [&g, delta](Vertex s, Vertex t) {
        return FromSssp(DeltaStepping(g, s, delta, t), t);
      };
    }
  } else {
    if (name == "dijkstra") {
      return [&instance](Vertex s, Vertex t) {
        const CspResult r = ConstrainedDijkstra(instance, s, t);
        return Outcome{r.timings, r.weight, r.delay};
      };
    }
    if (name == "bellman-ford") {
      return [&instance](Vertex s, Vertex t) {
        const CspResult r = ConstrainedBellmanFord(instance, s, t);
        return Outcome{r.timings, r.weight, r.delay};
      };
    }
  }
  throw std::invalid_argument("unknown algorithm '" + name + "' for task " +
                              std::to_string(static_cast<int>(config.task)));
}

}  // namespace

std::vector<TimingRecord> CollectTimings(const ProblemInstance& instance,
                                         const BenchConfig& config) {
  if (config.runs < 1) throw std::invalid_argument("runs must be at least 1");
  ProblemInstance effective = instance;
  if (config.bound) {
    if (*config.bound < 0) throw std::invalid_argument("negative bound");
    effective.bound = *config.bound;
  }
  const auto sample = SampleVertices(effective.graph.num_vertices(),
                                     config.sample_size, config.seed);
  const auto names = config.algorithms.empty() ? DefaultAlgorithms(config.task)
                                               : config.algorithms;
  std::vector<Runner> runners;
  for (const auto& name : names) {
    runners.push_back(MakeRunner(name, effective, config));
  }

  std::vector<TimingRecord> records;
  const auto pairs = sample.size() * (sample.size() - std::min<std::size_t>(
                                                          sample.size(), 1));
  records.reserve(names.size() * pairs * static_cast<std::size_t>(config.runs));
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (Vertex source : sample) {
      for (Vertex target : sample) {
        if (source == target) continue;
        for (std::int64_t run = 0; run < config.runs; ++run) {
          const Outcome o = runners[a](source, target);
          records.push_back({names[a], source, target, run, o.timings,
                             o.weight, o.delay});
        }
      }
    }
  }
  return records;
}

void WriteCsv(std::ostream& out, const std::vector<TimingRecord>& records) {
  out << kCsvHeader << '\n';
  for (const TimingRecord& r : records) {
    out << r.algorithm << ',' << r.source << ',' << r.target << ',' << r.run
        << ',' << r.timings.preprocessing_ns << ',' << r.timings.computation_ns
        << ',' << r.timings.total_ns << ',' << FormatWeight(r.path_weight)
        << ',';
    if (r.path_delay) out << *r.path_delay;
    out << '\n';
  }
}

std::vector<TimingRecord> RunBenchmark(const BenchConfig& config) {
  const ProblemInstance instance = LoadInstance(config.graph_path);
  auto records = CollectTimings(instance, config);
  std::ofstream out(config.output_path);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + config.output_path +
                             "'");
  }
  WriteCsv(out, records);
  out.flush();
  if (!out) {
    throw std::runtime_error("failed writing '" + config.output_path + "'");
  }
  return records;
}

}  // namespace spaths
