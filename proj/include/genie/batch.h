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

#ifndef GENIE_BATCH_H_
#define GENIE_BATCH_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "genie/augment.h"
#include "genie/euler.h"
#include "genie/ngram.h"
#include "genie/parallel.h"
#include "genie/topology.h"
#include "genie/validity.h"

namespace genie {

// Batch kernels. Each runs the same per-item routine under either backend;
// Execution::Serial() is the reference path and results are identical.

std::vector<std::string> HashTopologies(std::span<const Topology> circuits,
                                        const Execution& exec);

// Graph i is augmented with DeriveSeed(seed, i).
std::vector<AugmentResult> AugmentGraphs(std::span<const PinGraph> graphs,
                                         int target_count, std::uint64_t seed,
                                         const Execution& exec);

std::vector<ValidityReport> CheckSequences(
    std::span<const TokenSequence> seqs, const Execution& exec);

// Sample i uses cfg with seed DeriveSeed(cfg.seed, i).
std::vector<SampleResult> SampleMany(const NgramModel& model,
                                     const SamplerConfig& cfg, std::size_t n,
                                     const Execution& exec);

}  // namespace genie

#endif  // GENIE_BATCH_H_
