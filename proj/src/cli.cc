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


#include "spaths/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <exception>
#include <optional>

#include "spaths/bench.h"
#include "spaths/csp.h"
#include "spaths/graph.h"
#include "spaths/ksp.h"
#include "spaths/sssp.h"

namespace spaths {
namespace {

struct SsspArgs {
  std::string graph;
  Vertex source = kNoVertex;
  std::optional<Vertex> target;
  std::string algo;
  std::uint64_t seed = 0;
  std::optional<Weight> delta;
};

struct CspArgs {
  std::string graph;
  Vertex source = kNoVertex;
  Vertex target = kNoVertex;
  std::optional<Delay> bound;
  std::string algo;
};

struct KspArgs {
  std::string graph;
  Vertex source = kNoVertex;
  std::int64_t k = 0;
  std::optional<Vertex> target;
  std::int64_t max_pops = 10'000'000;
};

struct BenchArgs {
  std::string graph;
  int task = 1;
  std::int64_t sample = 30;
  std::int64_t runs = 50;
  std::uint64_t seed = 0;
  std::string out;
  std::vector<std::string> algos;
  std::optional<Weight> delta;
  std::optional<Delay> bound;
};

// A request whose source equals its target is answered on the augmented
// graph, searching source -> sink; the sink is printed as the source.
struct Endpoints {
  Graph graph;
  Vertex source = kNoVertex;
  Vertex target = kNoVertex;
  Vertex sink = kNoVertex;
};

Endpoints Resolve(const Graph& graph, Vertex source, Vertex target) {
  if (!graph.Contains(source)) {
    throw std::invalid_argument("source vertex out of range");
  }
  if (!graph.Contains(target)) {
    throw std::invalid_argument("target vertex out of range");
  }
  if (source != target) return {graph, source, target, kNoVertex};
  AugmentedGraph augmented = AugmentSource(graph, source);
  return {std::move(augmented.graph), source, augmented.sink, augmented.sink};
}

void PrintPath(std::ostream& out, const std::optional<std::vector<Vertex>>& path,
               const Endpoints& ends) {
  out << "path:";
  if (!path) {
    out << " none\n";
    return;
  }
  for (Vertex v : *path) {
    out << ' ' << (v == ends.sink && ends.sink != kNoVertex ? ends.source : v);
  }
  out << '\n';
}

void PrintTimings(std::ostream& out, const PhaseTimings& t) {
  out << "preprocessing_ns: " << t.preprocessing_ns << '\n'
      << "computation_ns: " << t.computation_ns << '\n'
      << "total_ns: " << t.total_ns << '\n';
}

SsspResult RunSsspAlgorithm(const SsspArgs& args, const Graph& graph,
                            Vertex source, std::optional<Vertex> target) {
  if (args.algo == "dijkstra") return Dijkstra(graph, source, target);
  if (args.algo == "delta") {
    return DeltaStepping(graph, source, args.delta.value_or(DefaultDelta(graph)),
                         target);
  }
  BellmanFordOptions options;
  if (args.algo == "bf-yen") {
    options.mode = BellmanFordMode::kYen;
  } else if (args.algo == "bf-yen-random") {
    options.mode = BellmanFordMode::kYenRandom;
    options.seed = args.seed;
  }
  return BellmanFord(graph, source, options, target);
}

int RunSssp(const SsspArgs& args, std::ostream& out) {
  const ProblemInstance instance = LoadInstance(args.graph);
  out << "algorithm: " << args.algo << '\n' << "source: " << args.source << '\n';
  if (!args.target) {
    const SsspResult r = RunSsspAlgorithm(args, instance.graph, args.source,
                                          std::nullopt);
    out << "distances:";
    for (Weight d : r.dist.values()) out << ' ' << FormatWeight(d);
    out << '\n';
    PrintTimings(out, r.timings);
    return 0;
  }
  const Endpoints ends = Resolve(instance.graph, args.source, *args.target);
  const SsspResult r =
      RunSsspAlgorithm(args, ends.graph, ends.source, ends.target);
  out << "target: " << *args.target << '\n'
      << "status: " << (r.path ? "ok" : "unreachable") << '\n'
      << "weight: " << FormatWeight(r.dist[ends.target]) << '\n';
  PrintPath(out, r.path, ends);
  PrintTimings(out, r.timings);
  return 0;
}

int RunCsp(const CspArgs& args, std::ostream& out) {
  ProblemInstance instance = LoadInstance(args.graph);
  if (args.bound) {
    if (*args.bound < 0) throw std::invalid_argument("bound must be >= 0");
    instance.bound = *args.bound;
  }
  const Endpoints ends = Resolve(instance.graph, args.source, args.target);
  const ProblemInstance resolved{ends.graph, instance.bound};
  const CspResult r =
      args.algo == "dijkstra"
          ? ConstrainedDijkstra(resolved, ends.source, ends.target)
          : ConstrainedBellmanFord(resolved, ends.source, ends.target);
  out << "algorithm: " << args.algo << '\n'
      << "source: " << args.source << '\n'
      << "target: " << args.target << '\n'
      << "bound: " << instance.bound << '\n'
      << "status: " << (r.feasible() ? "ok" : "unreachable") << '\n'
      << "weight: " << FormatWeight(r.weight) << '\n'
      << "delay: ";
  if (r.delay) {
    out << *r.delay << '\n';
  } else {
    out << "none\n";
  }
  PrintPath(out, r.path, ends);
  PrintTimings(out, r.timings);
  return 0;
}

int RunKsp(const KspArgs& args, std::ostream& out, std::ostream& err) {
  const ProblemInstance instance = LoadInstance(args.graph);
  KspOptions options;
  options.target = args.target;
  options.max_pops = args.max_pops;
  const auto paths = KShortestPaths(instance.graph, args.source, args.k, options);
  out << "source: " << args.source << '\n';
  if (args.target) out << "target: " << *args.target << '\n';
  out << "k: " << args.k << '\n' << "found: " << paths.size() << '\n';
  for (std::size_t i = 0; i < paths.size(); ++i) {
    out << "path " << i + 1 << ": weight " << FormatWeight(paths[i].weight)
        << ':';
    for (Vertex v : paths[i].vertices) out << ' ' << v;
    out << '\n';
  }
  if (static_cast<std::int64_t>(paths.size()) < args.k) {
    err << "warning: only " << paths.size()
        << (paths.size() == 1 ? " path exists" : " paths exist") << '\n';
  }
  return 0;
}

int RunBench(const BenchArgs& args, std::ostream& out) {
  BenchConfig config;
  config.graph_path = args.graph;
  config.task = args.task == 1 ? BenchTask::kShortestPath
                               : BenchTask::kConstrainedPath;
  config.sample_size = args.sample;
  config.runs = args.runs;
  config.seed = args.seed;
  config.output_path = args.out;
  config.algorithms = args.algos;
  config.delta = args.delta;
  config.bound = args.bound;
  const auto supported = SupportedAlgorithms(config.task);
  for (const auto& name : config.algorithms) {
    if (std::find(supported.begin(), supported.end(), name) ==
        supported.end()) {
      throw std::invalid_argument("unknown algorithm '" + name +
                                  "' for task " + std::to_string(args.task));
    }
  }
  const auto records = RunBenchmark(config);
  out << "wrote " << records.size() << " records to " << args.out << '\n';
  return 0;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Shortest-path, constrained-path and k-shortest-walk solvers",
               "spaths"};
  app.require_subcommand(1);

  SsspArgs sssp_args;
  auto* sssp = app.add_subcommand("sssp", "Single-source shortest paths");
  sssp->add_option("--graph", sssp_args.graph, "Graph file")->required();
  sssp->add_option("--source", sssp_args.source, "Source vertex")->required();
  sssp->add_option("--target", sssp_args.target, "Target vertex");
  sssp->add_option("--algo", sssp_args.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"dijkstra", "bf", "bf-yen", "bf-yen-random",
                             "delta"}));
  sssp->add_option("--seed", sssp_args.seed, "Seed for bf-yen-random");
  sssp->add_option("--delta", sssp_args.delta, "Bucket width for delta");

  CspArgs csp_args;
  auto* csp = app.add_subcommand("csp", "Delay-constrained shortest path");
  csp->add_option("--graph", csp_args.graph, "Graph file")->required();
  csp->add_option("--source", csp_args.source, "Source vertex")->required();
  csp->add_option("--target", csp_args.target, "Target vertex")->required();
  csp->add_option("--bound", csp_args.bound, "Delay bound (default: file)");
  csp->add_option("--algo", csp_args.algo, "Algorithm")
      ->required()
      ->check(CLI::IsMember({"dijkstra", "bellman-ford"}));

  KspArgs ksp_args;
  auto* ksp = app.add_subcommand("ksp", "k lightest walks from a source");
  ksp->add_option("--graph", ksp_args.graph, "Graph file")->required();
  ksp->add_option("--source", ksp_args.source, "Source vertex")->required();
  ksp->add_option("--k", ksp_args.k, "Number of walks")
      ->required()
      ->check(CLI::PositiveNumber);
  ksp->add_option("--target", ksp_args.target, "Only walks ending here");
  ksp->add_option("--max-pops", ksp_args.max_pops,
                  "Give up after this many frontier pops")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Timing benchmark to CSV");
  bench->add_option("--graph", bench_args.graph, "Graph file")->required();
  bench->add_option("--task", bench_args.task, "1: sssp, 2: csp")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  bench->add_option("--sample", bench_args.sample, "Sampled vertices")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--runs", bench_args.runs, "Runs per pair")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "Sampling seed")
      ->capture_default_str();
  bench->add_option("--out", bench_args.out, "Output CSV")->required();
  bench->add_option("--algos", bench_args.algos, "Comma-separated subset")
      ->delimiter(',');
  bench->add_option("--delta", bench_args.delta, "Bucket width for delta");
  bench->add_option("--bound", bench_args.bound, "Delay bound override");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*sssp) return RunSssp(sssp_args, out);
    if (*csp) return RunCsp(csp_args, out);
    if (*ksp) return RunKsp(ksp_args, out, err);
    return RunBench(bench_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace spaths
