// Copyright 2026 The Genie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference path versus the OpenMP backend for each batch kernel.
// Argument 0 selects Execution::Serial(), 1 selects Execution::Parallel().

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "genie/augment.h"
#include "genie/batch.h"
#include "genie/store.h"
#include "genie/topology.h"

namespace genie {
namespace {

const CircuitStore& Store() {
  static const CircuitStore store = IngestDirectory(GENIE_CORPUS_DIR).store;
  return store;
}

std::vector<Topology> Topologies() {
  std::vector<Topology> out;
  for (const auto& c : Store().circuits) out.push_back(c.topology);
  return out;
}

Execution Backend(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial() : Execution::Parallel();
}

void BM_HashTopologies(benchmark::State& state) {
  const auto topologies = Topologies();
  const Execution exec = Backend(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(HashTopologies(topologies, exec));
  }
  state.SetItemsProcessed(state.iterations() * topologies.size());
}
BENCHMARK(BM_HashTopologies)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AugmentGraphs(benchmark::State& state) {
  std::vector<PinGraph> graphs;
  for (const Topology& t : Topologies()) graphs.push_back(BuildGraph(t));
  const Execution exec = Backend(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(AugmentGraphs(graphs, 70, 1, exec));
  }
  state.SetItemsProcessed(state.iterations() * graphs.size());
}
BENCHMARK(BM_AugmentGraphs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

const Corpus& SmallCorpus() {
  static const Corpus corpus = [] {
    CorpusOptions options;
    options.per_circuit = 20;
    return BuildCorpus(Topologies(), options, Execution::Parallel());
  }();
  return corpus;
}

void BM_CheckSequences(benchmark::State& state) {
  const auto& seqs = SmallCorpus().train;
  const Execution exec = Backend(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(CheckSequences(seqs, exec));
  }
  state.SetItemsProcessed(state.iterations() * seqs.size());
}
BENCHMARK(BM_CheckSequences)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SampleMany(benchmark::State& state) {
  const Vocab& v = DefaultVocab();
  static const NgramModel model = NgramModel::Fit(
      DecodeIdStream(EncodeIdStream(SmallCorpus().train, v), v), v);
  SamplerConfig cfg;
  cfg.seed = 7;
  const Execution exec = Backend(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleMany(model, cfg, 200, exec));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_SampleMany)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace genie

BENCHMARK_MAIN();
