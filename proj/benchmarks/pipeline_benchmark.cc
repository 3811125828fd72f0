// Copyright 2026 The Pathcause Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Throughput of the pipeline stages on random connected topologies.

#include <benchmark/benchmark.h>

#include "pathcause/demonstrations.h"
#include "pathcause/executor.h"
#include "pathcause/graph.h"
#include "pathcause/miner.h"
#include "pathcause/oracle.h"
#include "pathcause/random.h"
#include "pathcause/structure.h"
#include "../tests/test_util.h"

namespace pathcause {
namespace {

Topology BenchTopology(int n) {
  Rng rng(42);
  return testing::RandomConnectedTopology(rng, n, 30, 3, "B");
}

EnumerationLimits FullLimits(int n) {
  return {n - 1, kDefaultCandidateCeiling};
}

void BM_ForEachCandidate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Topology t = BenchTopology(n);
  std::uint64_t count = 0;
  for (auto _ : state) {
    ForEachCandidate(t, t.nodes().front(), t.nodes().back(), FullLimits(n),
                     [&](std::span<const int> seq) {
                       count += seq.size();
                     });
  }
  benchmark::DoNotOptimize(count);
  state.SetItemsProcessed(static_cast<std::int64_t>(
      state.iterations() * SolutionSpaceSize(n, false, n - 1)));
}
BENCHMARK(BM_ForEachCandidate)->DenseRange(5, 8);

void BM_EnumerateSolutionSpace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Topology t = BenchTopology(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateSolutionSpace(
        t, {t.nodes().front(), t.nodes().back()}, FullLimits(n)));
  }
}
BENCHMARK(BM_EnumerateSolutionSpace)->DenseRange(5, 8);

void BM_Oracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Topology t = BenchTopology(n);
  Intent intent = testing::PathIntent(t.nodes().front(), t.nodes().back());
  for (auto _ : state) {
    benchmark::DoNotOptimize(OracleTargetSpace(t, intent, FullLimits(n)));
  }
}
BENCHMARK(BM_Oracle)->DenseRange(5, 8);

void BM_GenerateDemonstrations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Topology t = BenchTopology(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GenerateDemonstrations(t, PolicySpec{}, 20, 7));
  }
}
BENCHMARK(BM_GenerateDemonstrations)->DenseRange(5, 8)->Unit(
    benchmark::kMillisecond);

void BM_Mine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Topology t = BenchTopology(n);
  DemonstrationSet ds = GenerateDemonstrations(t, PolicySpec{}, 20, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Mine(ds));
}
BENCHMARK(BM_Mine)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_Posterior(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<ConstraintInstance> bag = {
      MakeInstance(ConstraintKind::kConnectivity, {}, 0.9),
      MakeInstance(ConstraintKind::kLoopFree, {}, 0.85),
      MakeInstance(ConstraintKind::kShortest, {}, 0.95),
      MakeInstance(ConstraintKind::kEndpoints,
                   {{"start", NodeId("A")}, {"dest", NodeId("D")}}, 0.7)};
  for (std::size_t i = bag.size(); i < k; ++i) {
    bag.push_back(MakeInstance(ConstraintKind::kFixedNode,
                               {{"node", NodeId("V" + std::to_string(i))}},
                               0.65));
  }
  bag.resize(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MapStructure(PosteriorOverArrangements(bag, {})));
  }
}
BENCHMARK(BM_Posterior)->DenseRange(1, 8);

void BM_Execute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Topology t = BenchTopology(n);
  Intent intent = testing::PathIntent(t.nodes().front(), t.nodes().back());
  CausalKnowledgeStructure cks;
  cks.chain = {MakeInstance(ConstraintKind::kConnectivity, {}, 0.9),
               MakeInstance(ConstraintKind::kLoopFree, {}, 0.9),
               MakeInstance(ConstraintKind::kEndpoints,
                            {{"start", intent.start}, {"dest", intent.dest}},
                            0.7),
               MakeInstance(ConstraintKind::kShortest, {}, 0.9)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(Execute(cks, t, intent, FullLimits(n)));
  }
}
BENCHMARK(BM_Execute)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pathcause

BENCHMARK_MAIN();
