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

#ifndef GENIE_AUGMENT_H_
#define GENIE_AUGMENT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "genie/euler.h"
#include "genie/parallel.h"
#include "genie/topology.h"

namespace genie {

struct AugmentResult {
  std::vector<TokenSequence> sequences;
  int requested = 0;
  int shortfall = 0;  // requested - sequences.size()
  std::uint64_t seeds_tried = 0;
};

inline constexpr int kSeedBudgetFactor = 50;

// Distinct Eulerian circuits of `g` from Encode with seeds seed, seed + 1, ...
// Stops at `target_count` sequences or after budget_factor * target_count
// seeds, reporting the shortfall.
AugmentResult Augment(const PinGraph& g, int target_count, std::uint64_t seed,
                      int budget_factor = kSeedBudgetFactor);

inline constexpr int kEnumerateMaxEdges = 12;

// Every VSS-anchored Eulerian circuit of the doubled graph by exhaustive
// backtracking (neighbours in index order), up to `limit` circuits. Throws
// TooLarge above kEnumerateMaxEdges edges.
std::vector<TokenSequence> EnumerateAll(const PinGraph& g, std::size_t limit);

struct CorpusOptions {
  int per_circuit = 70;
  double split_ratio = 0.9;
  std::uint64_t seed = 0;
  NetExpansion expansion = NetExpansion::kClique;
};

struct CorpusCircuit {
  std::string hash;  // TopologyHash
  PinGraph graph;    // canonical graph that was augmented
  int produced = 0;
};

struct Corpus {
  std::vector<TokenSequence> train;
  std::vector<TokenSequence> val;
  std::vector<CorpusCircuit> train_circuits;  // hash ascending
  std::vector<CorpusCircuit> val_circuits;    // hash ascending
  int duplicates_dropped = 0;
  int shortfall_circuits = 0;
};

// Circuits are deduplicated by TopologyHash, ordered by hash, shuffled with
// `seed` and split; each split is then augmented on its own so no topology
// appears in both. Output order is hash ascending within each split and does
// not depend on `exec`.
Corpus BuildCorpus(std::span<const Topology> circuits,
                   const CorpusOptions& options,
                   const Execution& exec = Execution::Serial());

// Train-split size for n circuits: floor(ratio * n), kept within [1, n - 1]
// when n >= 2.
std::size_t TrainCount(std::size_t n, double split_ratio);

}  // namespace genie

#endif  // GENIE_AUGMENT_H_
