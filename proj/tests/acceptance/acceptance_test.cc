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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fixtures.h"
#include "genie/augment.h"
#include "genie/batch.h"
#include "genie/canonical.h"
#include "genie/error.h"
#include "genie/euler.h"
#include "genie/eval.h"
#include "genie/ngram.h"
#include "genie/parallel.h"
#include "genie/rng.h"
#include "genie/store.h"
#include "genie/topology.h"
#include "genie/validity.h"
#include "genie/vocab.h"

namespace genie {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string Fmt(const char* format, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

std::vector<Topology> CorpusTopologies() {
  std::vector<Topology> out;
  for (const auto& c : testing::Corpus().circuits) out.push_back(c.topology);
  return out;
}

std::set<std::string> Lines(const std::vector<TokenSequence>& seqs) {
  std::set<std::string> out;
  for (const auto& s : seqs) out.insert(FormatSequenceLine(s));
  return out;
}

Outcome EulerRoundTrip() {
  const auto topologies = CorpusTopologies();
  const DatasetStats stats = ComputeDatasetStats(topologies);
  Stopwatch clock;
  int failures = 0;
  for (const Topology& t : topologies) {
    const PinGraph g = BuildGraph(t);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      if (Decode(Encode(g, seed)) != g) ++failures;
    }
  }
  const double secs = clock.Seconds();
  Outcome o;
  o.pass = topologies.size() >= 50 && stats.per_kind.size() >= 6 &&
           stats.max_devices >= 20 && failures == 0 && secs < 10.0;
  o.detail = Fmt("%zu circuits, %zu kinds, max %d devices, %d/%zu failed, %.2fs",
                 topologies.size(), stats.per_kind.size(), stats.max_devices,
                 failures, topologies.size() * 10, secs);
  return o;
}

Outcome EncodeRandomGraphs() {
  Rng rng(31);
  int failures = 0, encodes = 0;
  for (int i = 0; i < 1000; ++i) {
    const PinGraph g = testing::RandomConnectedGraph(rng, 4, 60);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      ++encodes;
      try {
        const TokenSequence s = Encode(g, seed);
        if (s.tokens.size() != 2u * g.num_edges() + 1) ++failures;
      } catch (const Error&) {
        ++failures;
      }
    }
  }
  return {failures == 0, Fmt("1000 graphs, %d encodes, %d failed", encodes,
                             failures)};
}

Outcome AugmentOracle() {
  const auto example = Augment(testing::TwoDeviceGraph(), 4, 0);
  const std::size_t example_distinct = Lines(example.sequences).size();

  std::vector<PinGraph> graphs;
  for (const Topology& t : CorpusTopologies()) {
    PinGraph g = BuildGraph(t);
    if (g.num_edges() <= kEnumerateMaxEdges) graphs.push_back(std::move(g));
  }
  const std::size_t from_corpus = graphs.size();
  graphs.push_back(testing::CapacitorGraph());
  graphs.push_back(testing::TriangleGraph());
  Rng rng(47);
  while (graphs.size() < from_corpus + 202) {
    PinGraph g = testing::RandomConnectedGraph(rng, 4, 9);
    if (g.num_edges() <= kEnumerateMaxEdges) graphs.push_back(std::move(g));
  }

  // Every graph gets a subset check; targets at or above the oracle count
  // (which exhaust the seed budget when n is large) are tried up to kFull.
  constexpr int kFull = 5000;
  int not_subset = 0, count_mismatch = 0, count_checked = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto oracle = Lines(EnumerateAll(graphs[i], 1u << 24));
    const int n = static_cast<int>(oracle.size());
    std::vector<int> targets = {std::max(1, std::min(n / 2, 1000))};
    if (n <= kFull) {
      targets.insert(targets.end(), {n, n + 3});
      ++count_checked;
    }
    for (int target : targets) {
      const auto got = Lines(Augment(graphs[i], target, i).sequences);
      for (const auto& line : got) not_subset += !oracle.contains(line);
      if (target >= n && got.size() != oracle.size()) ++count_mismatch;
      if (target < n && got.size() != static_cast<std::size_t>(target)) {
        ++count_mismatch;
      }
    }
  }
  Outcome o;
  o.pass = example_distinct >= 4 && not_subset == 0 && count_mismatch == 0;
  o.detail = Fmt("example %zu distinct; %zu graphs (%zu corpus), %d outside "
                 "oracle, %d count mismatches over %d full-count graphs",
                 example_distinct, graphs.size(), from_corpus, not_subset,
                 count_mismatch, count_checked);
  return o;
}

Outcome CanonicalInvariance() {
  Rng rng(53);
  int relabel_failures = 0, relabelings = 0;
  for (const Topology& t : CorpusTopologies()) {
    const PinGraph g = BuildGraph(t);
    const std::string h = CanonicalHash(g);
    for (int k = 0; k < 100; ++k) {
      ++relabelings;
      relabel_failures +=
          CanonicalHash(RelabelDevices(g, testing::RandomRenumbering(rng, g))) != h;
    }
  }
  // Pairs: relabeled copies, independent draws, and tiny graphs that often
  // coincide up to isomorphism.
  int disagreements = 0, isomorphic = 0;
  for (int i = 0; i < 500; ++i) {
    PinGraph a, b;
    if (i % 3 == 0) {
      a = BuildGraph(testing::RandomSmallTopology(rng, 16));
      b = RelabelDevices(a, testing::RandomRenumbering(rng, a));
    } else if (i % 3 == 1) {
      a = BuildGraph(testing::RandomSmallTopology(rng, 16));
      b = BuildGraph(testing::RandomSmallTopology(rng, 16));
    } else {
      a = BuildGraph(testing::RandomSmallTopology(rng, 6));
      b = BuildGraph(testing::RandomSmallTopology(rng, 6));
    }
    const bool iso = IsomorphicOracle(a, b);
    isomorphic += iso;
    if (iso != (CanonicalHash(a) == CanonicalHash(b))) {
      ++disagreements;
      std::fprintf(stderr, "disagreement on pair %d (oracle %d)\n", i, iso);
    }
  }
  Outcome o;
  o.pass = relabel_failures == 0 && disagreements <= 5;
  o.detail = Fmt("%d relabelings, %d changed digest; 500 pairs (%d isomorphic), "
                 "%d disagreements",
                 relabelings, relabel_failures, isomorphic, disagreements);
  return o;
}

Outcome TokenizerAnchors() {
  // Every index printed in the published tokenizer table.
  const std::vector<std::pair<std::string, int>> printed = {
      {"NM1", 0},        {"NM1_D", 1},      {"NM1_G", 2},     {"NM1_S", 3},
      {"NM1_B", 4},      {"NM2", 5},        {"NM25_B", 124},  {"PM1", 125},
      {"PM1_D", 126},    {"PM1_G", 127},    {"PM1_S", 128},   {"PM1_B", 129},
      {"PM2", 130},      {"PM25_B", 249},   {"NPN1", 250},    {"NPN1_C", 251},
      {"NPN1_B", 252},   {"NPN1_E", 253},   {"NPN2", 254},    {"NPN25_E", 349},
      {"PNP1", 350},     {"PNP1_C", 351},   {"PNP1_B", 352},  {"PNP1_E", 353},
      {"PNP2", 354},     {"PNP25_E", 449},  {"R1", 450},      {"R1_P", 451},
      {"R1_N", 452},     {"R2", 453},       {"R25_N", 524},   {"C1", 525},
      {"C1_P", 526},     {"C1_N", 527},     {"C2", 528},      {"C25_N", 599},
      {"L1", 600},       {"L1_P", 601},     {"L1_N", 602},    {"L2", 603},
      {"L25_N", 674},    {"DIO1", 675},     {"DIO1_P", 676},  {"DIO1_N", 677},
      {"DIO2", 678},     {"DIO25_N", 749},  {"XOR1", 750},    {"XOR1_A", 751},
      {"XOR1_B", 752},   {"XOR1_VDD", 753}, {"XOR1_VSS", 754}, {"XOR1_Y", 755},
      {"XOR2", 756},     {"XOR5_Y", 779},   {"INV1", 815},    {"INV1_A", 816},
      {"INV1_Q", 817},   {"INV1_VDD", 818}, {"INV1_VSS", 819}, {"INV2", 820},
      {"INV10_VSS", 864}, {"TG1", 865},     {"TG1_A", 866},   {"TG1_B", 867},
      {"TG1_C", 868},    {"TG1_VDD", 869},  {"TG1_VSS", 870}, {"TG2", 871},
      {"TG10_VSS", 924}, {"VIN1", 925},     {"VIN2", 926},    {"VIN3", 927},
      {"VIN4", 928},     {"VIN5", 929},     {"IIN1", 930},    {"IIN2", 931},
      {"LOGICQB1", 1024}, {"LOGICQB2", 1025}, {"VDD", 1026},  {"VSS", 1027},
      {"TRUNCATE", 1028}};
  const Vocab& v = DefaultVocab();
  int mismatches = 0;
  for (const auto& [token, id] : printed) {
    if (v.Find(token) != std::optional<TokenId>(id)) {
      ++mismatches;
      std::fprintf(stderr, "anchor %s expected %d\n", token.c_str(), id);
    }
  }
  return {mismatches == 0 && v.size() == 1029,
          Fmt("%zu printed anchors, %d mismatched, vocab size %zu",
              printed.size(), mismatches, static_cast<std::size_t>(v.size()))};
}

Outcome ValidityGate() {
  int corpus_invalid = 0;
  const auto topologies = CorpusTopologies();
  for (const Topology& t : topologies) corpus_invalid += !CheckTopology(t).valid;
  int missed = 0;
  const auto cases = testing::NegativeCases();
  for (const auto& c : cases) {
    const ValidityReport r = CheckTopology(c.topology);
    if (r.valid || !r.Has(c.expected)) {
      ++missed;
      std::fprintf(stderr, "negative case %s not flagged as %s\n",
                   c.name.c_str(), std::string(ViolationName(c.expected)).c_str());
    }
  }
  return {corpus_invalid == 0 && missed == 0 && cases.size() == 10,
          Fmt("%zu corpus circuits, %d invalid; %zu negative cases, %d missed",
              topologies.size(), corpus_invalid, cases.size(), missed)};
}

std::unordered_set<std::string> HashSet(const std::vector<CorpusCircuit>& cs) {
  std::unordered_set<std::string> out;
  for (const auto& c : cs) out.insert(c.hash);
  return out;
}

Outcome SplitHygiene() {
  CorpusOptions options;
  options.per_circuit = 10;
  const Corpus corpus = BuildCorpus(CorpusTopologies(), options);
  const auto train = HashSet(corpus.train_circuits);
  int overlap = 0;
  for (const auto& c : corpus.val_circuits) overlap += train.contains(c.hash);

  auto encode_all = [](const std::vector<CorpusCircuit>& cs) {
    std::vector<TokenSequence> out;
    for (const auto& c : cs) out.push_back(Encode(c.graph, 9001));
    return out;
  };
  const EvalSummary seen =
      Evaluate(encode_all(corpus.train_circuits), train).summary;
  const EvalSummary unseen =
      Evaluate(encode_all(corpus.val_circuits), train).summary;
  Outcome o;
  o.pass = overlap == 0 && seen.novel_fraction == 0.0 &&
           unseen.novel_fraction == 1.0 && seen.valid_fraction == 1.0 &&
           unseen.valid_fraction == 1.0;
  o.detail = Fmt("%zu train / %zu val circuits, overlap %d; novelty train %.3f, "
                 "val %.3f",
                 train.size(), corpus.val_circuits.size(), overlap,
                 seen.novel_fraction, unseen.novel_fraction);
  return o;
}

Outcome GenerationPipeline() {
  CorpusOptions options;
  const Corpus corpus =
      BuildCorpus(CorpusTopologies(), options, Execution::Parallel());
  const auto train = HashSet(corpus.train_circuits);

  Stopwatch clock;
  const Vocab& v = DefaultVocab();
  const NgramModel model = NgramModel::Fit(
      DecodeIdStream(EncodeIdStream(corpus.train, v), v), v);
  SamplerConfig cfg;
  cfg.seed = 2026;
  auto run = [&](const Execution& exec) {
    std::vector<TokenSequence> samples;
    for (auto& r : SampleMany(model, cfg, 1000, exec)) {
      samples.push_back(std::move(r.sequence));
    }
    return std::make_pair(samples, Evaluate(samples, train, exec).summary);
  };
  const auto [samples, summary] = run(Execution::Serial());
  const double secs = clock.Seconds();
  const auto [again, summary_again] = run(Execution::Parallel());

  int illegal = 0;
  for (const auto& s : samples) {
    try {
      CheckLegalEdges(ParseTokens(s));
    } catch (const Error&) {
      ++illegal;
    }
  }
  const bool deterministic =
      again == samples && SummaryJson(summary_again) == SummaryJson(summary);
  Outcome o;
  o.pass = summary.n_samples == 1000 && illegal == 0 && deterministic &&
           secs < 60.0;
  o.detail = Fmt("%zu train sequences, 1000 samples, %d illegal, valid %.3f, "
                 "novel %.3f, deterministic %s, %.2fs",
                 corpus.train.size(), illegal, summary.valid_fraction,
                 summary.novel_fraction, deterministic ? "yes" : "no", secs);
  return o;
}

}  // namespace
}  // namespace genie

int main() {
  using Criterion = std::pair<const char*, std::function<genie::Outcome()>>;
  const std::vector<Criterion> criteria = {
      {"euler_round_trip", genie::EulerRoundTrip},
      {"encode_random_graphs", genie::EncodeRandomGraphs},
      {"augment_oracle", genie::AugmentOracle},
      {"canonical_hash_invariance", genie::CanonicalInvariance},
      {"tokenizer_anchors", genie::TokenizerAnchors},
      {"validity_gate", genie::ValidityGate},
      {"split_hygiene", genie::SplitHygiene},
      {"generation_pipeline", genie::GenerationPipeline},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    genie::Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
