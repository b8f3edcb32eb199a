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

#include "genie/augment.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "genie/canonical.h"
#include "genie/error.h"
#include "genie/rng.h"

namespace genie {

AugmentResult Augment(const PinGraph& g, int target_count, std::uint64_t seed,
                      int budget_factor) {
  if (target_count < 1) {
    throw Error(ErrorCode::kInvalidArgument, "target_count must be >= 1");
  }
  AugmentResult result;
  result.requested = target_count;
  std::unordered_set<std::string> seen;
  const auto budget = static_cast<std::uint64_t>(target_count) *
                      static_cast<std::uint64_t>(std::max(budget_factor, 1));
  for (std::uint64_t i = 0;
       i < budget && result.sequences.size() < static_cast<std::size_t>(target_count);
       ++i) {
    TokenSequence s = Encode(g, seed + i);
    ++result.seeds_tried;
    if (seen.insert(FormatSequenceLine(s)).second) {
      result.sequences.push_back(std::move(s));
    }
  }
  result.shortfall =
      target_count - static_cast<int>(result.sequences.size());
  return result;
}

std::vector<TokenSequence> EnumerateAll(const PinGraph& g, std::size_t limit) {
  if (g.num_edges() > kEnumerateMaxEdges) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(g.num_edges()) + " edges exceeds " +
                    std::to_string(kEnumerateMaxEdges));
  }
  const auto vss = g.VssIndex();
  if (!vss) throw Error(ErrorCode::kMissingVss, "graph has no VSS node");
  if (g.num_edges() == 0 || !g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected, "graph has no Eulerian circuit");
  }
  const int n = g.num_nodes();
  const std::size_t arcs = 2 * static_cast<std::size_t>(g.num_edges());
  std::vector<char> used(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> path = {*vss};
  std::vector<TokenSequence> out;

  auto dfs = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    const int u = path.back();
    if (path.size() == arcs + 1) {
      if (u == *vss) {
        TokenSequence s;
        for (int x : path) s.tokens.push_back(NodeName(g.node(x)));
        out.push_back(std::move(s));
      }
      return;
    }
    for (int v : g.Neighbors(u)) {
      char& arc = used[static_cast<std::size_t>(u) * n + v];
      if (arc) continue;
      arc = 1;
      path.push_back(v);
      self(self);
      path.pop_back();
      arc = 0;
      if (out.size() >= limit) return;
    }
  };
  if (limit > 0) dfs(dfs);
  return out;
}

std::size_t TrainCount(std::size_t n, double split_ratio) {
  if (n == 0) return 0;
  if (n == 1) return 1;
  auto count = static_cast<std::size_t>(
      std::floor(split_ratio * static_cast<double>(n) + 1e-9));
  return std::clamp<std::size_t>(count, 1, n - 1);
}

Corpus BuildCorpus(std::span<const Topology> circuits,
                   const CorpusOptions& options, const Execution& exec) {
  if (options.per_circuit < 1) {
    throw Error(ErrorCode::kInvalidArgument, "per_circuit must be >= 1");
  }
  if (!(options.split_ratio > 0.0 && options.split_ratio < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "split_ratio must be in (0, 1)");
  }
  std::vector<CorpusCircuit> all(circuits.size());
  ForEachIndex(circuits.size(), exec, [&](std::size_t i) {
    const Topology norm = Normalize(circuits[i]);
    all[i].hash = TopologyHash(norm);
    all[i].graph = Canonicalize(BuildGraph(norm, options.expansion)).graph;
  });

  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return all[a].hash < all[b].hash;
  });
  std::vector<CorpusCircuit> unique;
  Corpus corpus;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (!unique.empty() && all[order[k]].hash == unique.back().hash) {
      ++corpus.duplicates_dropped;
      continue;
    }
    unique.push_back(std::move(all[order[k]]));
  }

  Rng rng(options.seed);
  rng.Shuffle(std::span<CorpusCircuit>(unique));
  const std::size_t n_train = TrainCount(unique.size(), options.split_ratio);

  std::vector<AugmentResult> augmented(unique.size());
  ForEachIndex(unique.size(), exec, [&](std::size_t i) {
    const std::uint64_t stream = std::stoull(unique[i].hash.substr(0, 16),
                                             nullptr, 16);
    augmented[i] = Augment(unique[i].graph, options.per_circuit,
                           DeriveSeed(options.seed, stream));
    unique[i].produced = static_cast<int>(augmented[i].sequences.size());
  });

  auto collect = [&](std::size_t begin, std::size_t end,
                     std::vector<CorpusCircuit>& circuits_out,
                     std::vector<TokenSequence>& seqs_out) {
    std::vector<std::size_t> idx(end - begin);
    std::iota(idx.begin(), idx.end(), begin);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return unique[a].hash < unique[b].hash;
    });
    for (std::size_t i : idx) {
      if (augmented[i].shortfall > 0) ++corpus.shortfall_circuits;
      for (TokenSequence& s : augmented[i].sequences) {
        seqs_out.push_back(std::move(s));
      }
      circuits_out.push_back(std::move(unique[i]));
    }
  };
  collect(0, n_train, corpus.train_circuits, corpus.train);
  collect(n_train, unique.size(), corpus.val_circuits, corpus.val);
  return corpus;
}

}  // namespace genie
