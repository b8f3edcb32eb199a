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

#ifndef GENIE_EVAL_H_
#define GENIE_EVAL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "genie/euler.h"
#include "genie/parallel.h"
#include "genie/topology.h"
#include "genie/validity.h"

namespace genie {

struct SampleVerdict {
  ValidityReport report;
  std::optional<std::string> hash;  // TopologyHash, valid samples only
  int devices = 0;
  bool novel = false;
};

struct EvalSummary {
  std::size_t n_samples = 0;
  std::size_t n_valid = 0;
  std::size_t n_novel = 0;
  std::size_t n_unique_valid = 0;  // distinct hashes among valid samples
  std::size_t n_euler_strict = 0;
  double valid_fraction = 0.0;         // n_valid / n_samples
  double novel_fraction = 0.0;         // n_novel / n_valid
  double euler_strict_fraction = 0.0;  // n_euler_strict / n_samples
  int max_devices = 0;                 // over valid samples
  std::map<int, std::size_t> device_count_histogram;  // valid samples
  std::map<std::string, std::size_t> violation_histogram;
};

struct Evaluation {
  EvalSummary summary;
  std::vector<SampleVerdict> samples;
};

// Valid = CheckSequence verdict. A valid sample is novel when its topology
// hash is not in `known_hashes`; invalid samples are outside the novelty
// denominator.
Evaluation Evaluate(std::span<const TokenSequence> samples,
                    const std::unordered_set<std::string>& known_hashes,
                    const Execution& exec = Execution::Serial());

std::string SummaryJson(const EvalSummary& s);
std::string DeviceHistogramCsv(const std::map<int, std::size_t>& histogram);
std::string ViolationHistogramCsv(const EvalSummary& s);

struct DatasetStats {
  std::size_t n_circuits = 0;
  int max_devices = 0;
  std::map<int, std::size_t> device_count_histogram;
  std::map<std::string, std::size_t> per_kind;  // device instances per kind
  std::map<std::string, std::size_t> type_histogram;  // when labels given
};

// `labels` is either empty or one circuit-type label per circuit.
DatasetStats ComputeDatasetStats(std::span<const Topology> circuits,
                                 std::span<const std::string> labels = {});

// "section,key,count" rows with sections device_count, kind and type.
std::string DatasetStatsCsv(const DatasetStats& stats);

}  // namespace genie

#endif  // GENIE_EVAL_H_
