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

#include "genie/batch.h"

#include "genie/canonical.h"
#include "genie/rng.h"

namespace genie {

std::vector<std::string> HashTopologies(std::span<const Topology> circuits,
                                        const Execution& exec) {
  std::vector<std::string> out(circuits.size());
  ForEachIndex(circuits.size(), exec,
               [&](std::size_t i) { out[i] = TopologyHash(circuits[i]); });
  return out;
}

std::vector<AugmentResult> AugmentGraphs(std::span<const PinGraph> graphs,
                                         int target_count, std::uint64_t seed,
                                         const Execution& exec) {
  std::vector<AugmentResult> out(graphs.size());
  ForEachIndex(graphs.size(), exec, [&](std::size_t i) {
    out[i] = Augment(graphs[i], target_count, DeriveSeed(seed, i));
  });
  return out;
}

std::vector<ValidityReport> CheckSequences(
    std::span<const TokenSequence> seqs, const Execution& exec) {
  std::vector<ValidityReport> out(seqs.size());
  ForEachIndex(seqs.size(), exec,
               [&](std::size_t i) { out[i] = CheckSequence(seqs[i]); });
  return out;
}

std::vector<SampleResult> SampleMany(const NgramModel& model,
                                     const SamplerConfig& cfg, std::size_t n,
                                     const Execution& exec) {
  std::vector<SampleResult> out(n);
  ForEachIndex(n, exec, [&](std::size_t i) {
    SamplerConfig local = cfg;
    local.seed = DeriveSeed(cfg.seed, i);
    out[i] = SampleWithStats(model, local);
  });
  return out;
}

}  // namespace genie
