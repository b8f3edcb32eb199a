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

#include <gtest/gtest.h>

#include <set>

#include "fixtures.h"
#include "genie/canonical.h"
#include "genie/error.h"

namespace genie {
namespace {

// Independent count of VSS-anchored Eulerian circuits of the doubled graph:
// BEST theorem with the arborescence count from the matrix-tree theorem,
// times deg(VSS) starting arcs.
long long BestTheoremCount(const PinGraph& g) {
  const int n = g.num_nodes();
  const int root = *g.VssIndex();
  // Laplacian minor without the root row/column, exact Bareiss elimination.
  std::vector<std::vector<__int128>> m;
  for (int i = 0; i < n; ++i) {
    if (i == root) continue;
    std::vector<__int128> row;
    for (int j = 0; j < n; ++j) {
      if (j == root) continue;
      row.push_back(i == j ? g.Degree(i) : -static_cast<int>(g.HasEdge(i, j)));
    }
    m.push_back(row);
  }
  const int k = n - 1;
  __int128 prev = 1;
  for (int p = 0; p < k; ++p) {
    if (m[p][p] == 0) {
      int swap = p + 1;
      while (swap < k && m[swap][p] == 0) ++swap;
      if (swap == k) return 0;
      std::swap(m[p], m[swap]);
      for (auto& x : m[p]) x = -x;
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
      }
    }
    prev = m[p][p];
  }
  __int128 count = k == 0 ? 1 : m[k - 1][k - 1];
  for (int v = 0; v < n; ++v) {
    for (int f = 2; f < g.Degree(v); ++f) count *= f;
  }
  return static_cast<long long>(count * g.Degree(root));
}

std::set<std::string> Lines(const std::vector<TokenSequence>& seqs) {
  std::set<std::string> out;
  for (const auto& s : seqs) out.insert(FormatSequenceLine(s));
  return out;
}

TEST(EnumerateTest, CapacitorAndTriangleCounts) {
  // Frozen from EnumerateAll and confirmed by the closed-form count.
  const PinGraph cap = testing::CapacitorGraph();
  const PinGraph tri = testing::TriangleGraph();
  EXPECT_EQ(EnumerateAll(cap, 1000).size(), 8u);
  EXPECT_EQ(EnumerateAll(tri, 1000).size(), 6u);
  EXPECT_EQ(BestTheoremCount(cap), 8);
  EXPECT_EQ(BestTheoremCount(tri), 6);
  EXPECT_TRUE(Lines(EnumerateAll(cap, 1000))
                  .contains("VSS C1_P C1 C1_N VSS C1_N C1 C1_P VSS TRUNCATE"));
}

TEST(EnumerateTest, LimitAndSize) {
  const auto one = EnumerateAll(testing::CapacitorGraph(), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], EnumerateAll(testing::CapacitorGraph(), 8)[0]);
  try {
    EnumerateAll(testing::TwoDeviceGraph(), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(EnumerateTest, MatchesClosedFormOnRandomSmallGraphs) {
  Rng rng(8);
  int checked = 0;
  while (checked < 40) {
    const PinGraph g = testing::RandomConnectedGraph(rng, 4, 9);
    if (g.num_edges() > 9) continue;
    const auto all = EnumerateAll(g, 1u << 20);
    EXPECT_EQ(static_cast<long long>(all.size()), BestTheoremCount(g));
    EXPECT_EQ(Lines(all).size(), all.size());
    for (const auto& s : all) EXPECT_TRUE(VerifyEuler(s, g).ok);
    ++checked;
  }
}

TEST(AugmentTest, FindsEveryCircuitOfSmallGraphs) {
  for (const PinGraph& g : {testing::CapacitorGraph(), testing::TriangleGraph()}) {
    const auto oracle = Lines(EnumerateAll(g, 1000));
    const AugmentResult r = Augment(g, 10, 0);
    EXPECT_EQ(Lines(r.sequences), oracle);
    EXPECT_EQ(r.requested, 10);
    EXPECT_EQ(r.shortfall, 10 - static_cast<int>(oracle.size()));
    EXPECT_EQ(r.seeds_tried, 10u * kSeedBudgetFactor);
  }
}

TEST(AugmentTest, TwoDeviceCircuitTargetFour) {
  const AugmentResult r = Augment(testing::TwoDeviceGraph(), 4, 0);
  EXPECT_EQ(r.sequences.size(), 4u);
  EXPECT_EQ(Lines(r.sequences).size(), 4u);
  EXPECT_EQ(r.shortfall, 0);
}

TEST(AugmentTest, TargetOneIsEncode) {
  const PinGraph g = testing::TwoDeviceGraph();
  const AugmentResult r = Augment(g, 1, 42);
  ASSERT_EQ(r.sequences.size(), 1u);
  EXPECT_EQ(r.sequences[0], Encode(g, 42));
}

TEST(AugmentTest, OutputsShareTheInputHash) {
  const PinGraph g = BuildGraph(testing::Corpus().circuits[3].topology);
  const std::string h = CanonicalHash(g);
  for (const auto& s : Augment(g, 20, 1).sequences) {
    EXPECT_EQ(CanonicalHash(Decode(s)), h);
  }
}

TEST(CorpusTest, TrainCount) {
  EXPECT_EQ(TrainCount(10, 0.9), 9u);
  EXPECT_EQ(TrainCount(2, 0.5), 1u);
  EXPECT_EQ(TrainCount(2, 0.99), 1u);
  EXPECT_EQ(TrainCount(3, 0.01), 1u);
  EXPECT_EQ(TrainCount(72, 0.9), 64u);
}

std::vector<Topology> CorpusTopologies(std::size_t n) {
  std::vector<Topology> out;
  for (const auto& c : testing::Corpus().circuits) {
    if (out.size() == n) break;
    out.push_back(c.topology);
  }
  return out;
}

TEST(CorpusTest, SplitIsDisjointAndDeterministic) {
  const auto topologies = CorpusTopologies(10);
  CorpusOptions options;
  options.per_circuit = 5;
  options.seed = 3;
  const Corpus a = BuildCorpus(topologies, options);
  const Corpus b = BuildCorpus(topologies, options);
  EXPECT_EQ(a.train_circuits.size(), 9u);
  EXPECT_EQ(a.val_circuits.size(), 1u);
  EXPECT_EQ(a.train, b.train);
  EXPECT_EQ(a.val, b.val);
  std::set<std::string> train;
  for (const auto& c : a.train_circuits) train.insert(c.hash);
  for (const auto& c : a.val_circuits) EXPECT_FALSE(train.contains(c.hash));
  EXPECT_TRUE(std::is_sorted(a.train_circuits.begin(), a.train_circuits.end(),
                             [](const auto& x, const auto& y) {
                               return x.hash < y.hash;
                             }));
}

TEST(CorpusTest, DuplicatesAreDropped) {
  auto topologies = CorpusTopologies(4);
  topologies.push_back(topologies[1]);
  CorpusOptions options;
  options.per_circuit = 2;
  const Corpus c = BuildCorpus(topologies, options);
  EXPECT_EQ(c.duplicates_dropped, 1);
  EXPECT_EQ(c.train_circuits.size() + c.val_circuits.size(), 4u);
}

TEST(CorpusTest, HalfSplitOfTwo) {
  CorpusOptions options;
  options.split_ratio = 0.5;
  options.per_circuit = 3;
  const Corpus c = BuildCorpus(CorpusTopologies(2), options);
  EXPECT_EQ(c.train_circuits.size(), 1u);
  EXPECT_EQ(c.val_circuits.size(), 1u);
}

TEST(CorpusTest, ParallelMatchesSerial) {
  const auto topologies = CorpusTopologies(20);
  CorpusOptions options;
  options.per_circuit = 8;
  options.seed = 17;
  const Corpus serial = BuildCorpus(topologies, options, Execution::Serial());
  const Corpus parallel =
      BuildCorpus(topologies, options, Execution::Parallel(4));
  EXPECT_EQ(serial.train, parallel.train);
  EXPECT_EQ(serial.val, parallel.val);
}

TEST(CorpusTest, RejectsBadOptions) {
  CorpusOptions options;
  options.per_circuit = 0;
  EXPECT_THROW(BuildCorpus(CorpusTopologies(3), options), Error);
  options.per_circuit = 1;
  options.split_ratio = 1.0;
  EXPECT_THROW(BuildCorpus(CorpusTopologies(3), options), Error);
}

}  // namespace
}  // namespace genie
