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

#include "genie/eval.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "genie/canonical.h"
#include "genie/error.h"
#include "json.hpp"

namespace genie {

Evaluation Evaluate(std::span<const TokenSequence> samples,
                    const std::unordered_set<std::string>& known_hashes,
                    const Execution& exec) {
  Evaluation eval;
  eval.samples.resize(samples.size());
  ForEachIndex(samples.size(), exec, [&](std::size_t i) {
    SampleVerdict& v = eval.samples[i];
    v.report = CheckSequence(samples[i]);
    if (!v.report.valid) return;
    const Topology t = NetsFromGraph(Decode(samples[i]));
    v.devices = static_cast<int>(t.devices.size());
    v.hash = TopologyHash(t);
    v.novel = !known_hashes.contains(*v.hash);
  });

  EvalSummary& s = eval.summary;
  s.n_samples = samples.size();
  std::set<std::string> unique;
  for (const SampleVerdict& v : eval.samples) {
    if (v.report.euler_strict) ++s.n_euler_strict;
    for (const Violation& violation : v.report.violations) {
      ++s.violation_histogram[std::string(ViolationName(violation.code))];
    }
    if (!v.report.valid) continue;
    ++s.n_valid;
    if (v.novel) ++s.n_novel;
    unique.insert(*v.hash);
    ++s.device_count_histogram[v.devices];
    s.max_devices = std::max(s.max_devices, v.devices);
  }
  s.n_unique_valid = unique.size();
  auto ratio = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  s.valid_fraction = ratio(s.n_valid, s.n_samples);
  s.novel_fraction = ratio(s.n_novel, s.n_valid);
  s.euler_strict_fraction = ratio(s.n_euler_strict, s.n_samples);
  return eval;
}

std::string SummaryJson(const EvalSummary& s) {
  nlohmann::ordered_json j;
  j["n_samples"] = s.n_samples;
  j["n_valid"] = s.n_valid;
  j["n_novel"] = s.n_novel;
  j["n_unique_valid"] = s.n_unique_valid;
  j["n_euler_strict"] = s.n_euler_strict;
  j["valid_fraction"] = s.valid_fraction;
  j["novel_fraction"] = s.novel_fraction;
  j["euler_strict_fraction"] = s.euler_strict_fraction;
  j["max_devices"] = s.max_devices;
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [devices, count] : s.device_count_histogram) {
    hist[std::to_string(devices)] = count;
  }
  j["device_count_histogram"] = hist;
  nlohmann::ordered_json violations = nlohmann::ordered_json::object();
  for (const auto& [code, count] : s.violation_histogram) {
    violations[code] = count;
  }
  j["violation_histogram"] = violations;
  return j.dump(2);
}

std::string DeviceHistogramCsv(const std::map<int, std::size_t>& histogram) {
  std::ostringstream out;
  out << "devices,count\n";
  for (const auto& [devices, count] : histogram) {
    out << devices << ',' << count << '\n';
  }
  return out.str();
}

std::string ViolationHistogramCsv(const EvalSummary& s) {
  std::ostringstream out;
  out << "violation,count\n";
  for (const auto& [code, count] : s.violation_histogram) {
    out << code << ',' << count << '\n';
  }
  return out.str();
}

DatasetStats ComputeDatasetStats(std::span<const Topology> circuits,
                                 std::span<const std::string> labels) {
  if (!labels.empty() && labels.size() != circuits.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "need one label per circuit or none");
  }
  DatasetStats stats;
  stats.n_circuits = circuits.size();
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    const int devices = static_cast<int>(circuits[i].devices.size());
    ++stats.device_count_histogram[devices];
    stats.max_devices = std::max(stats.max_devices, devices);
    for (const Device& d : circuits[i].devices) {
      ++stats.per_kind[std::string(GetKind(d.kind).name)];
    }
    if (!labels.empty()) ++stats.type_histogram[labels[i]];
  }
  return stats;
}

std::string DatasetStatsCsv(const DatasetStats& stats) {
  std::ostringstream out;
  out << "section,key,count\n";
  for (const auto& [devices, count] : stats.device_count_histogram) {
    out << "device_count," << devices << ',' << count << '\n';
  }
  for (const auto& [kind, count] : stats.per_kind) {
    out << "kind," << kind << ',' << count << '\n';
  }
  for (const auto& [type, count] : stats.type_histogram) {
    out << "type," << type << ',' << count << '\n';
  }
  return out.str();
}

}  // namespace genie
