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

#include "genie/euler.h"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.h"
#include "genie/error.h"

namespace genie {
namespace {

TokenSequence Seq(std::string_view line) { return ParseSequenceLine(line); }

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::kInvalidArgument;
}

TEST(EulerTest, TwoDeviceCircuitHas43Tokens) {
  const PinGraph g = testing::TwoDeviceGraph();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TokenSequence s = Encode(g, seed);
    EXPECT_EQ(s.tokens.size(), 43u);
    EXPECT_TRUE(VerifyEuler(s, g).ok);
    EXPECT_EQ(Decode(s), g);
  }
}

TEST(EulerTest, CapacitorWalk) {
  const PinGraph g = testing::CapacitorGraph();
  const TokenSequence s = Encode(g, 0);
  EXPECT_EQ(s.tokens.size(), 9u);
  EXPECT_EQ(s.tokens.front(), "VSS");
  EXPECT_EQ(s.tokens.back(), "VSS");
  const TokenSequence listed =
      Seq("VSS C1_P C1 C1_N VSS C1_N C1 C1_P VSS TRUNCATE");
  EXPECT_TRUE(VerifyEuler(listed, g).ok);
  EXPECT_EQ(Decode(listed), g);
}

TEST(EulerTest, EncodeIsDeterministicPerSeed) {
  const PinGraph g = BuildGraph(testing::Corpus().circuits.front().topology);
  EXPECT_EQ(Encode(g, 9), Encode(g, 9));
}

TEST(EulerTest, CorpusRoundTrip) {
  for (const auto& c : testing::Corpus().circuits) {
    const PinGraph g = BuildGraph(c.topology);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const TokenSequence s = Encode(g, seed);
      ASSERT_EQ(s.tokens.size(), 2u * g.num_edges() + 1) << c.name;
      EXPECT_EQ(Decode(s), g) << c.name;
    }
  }
}

TEST(EulerTest, ShorterThanAdjacencyMatrix) {
  for (const auto& c : testing::Corpus().circuits) {
    const PinGraph g = BuildGraph(c.topology);
    const std::size_t n = g.num_nodes();
    EXPECT_LT(Encode(g, 0).tokens.size(), n * n) << c.name;
  }
  EXPECT_EQ(Encode(testing::TwoDeviceGraph(), 0).tokens.size(), 43u);
}

TEST(EulerTest, RandomGraphsEncode) {
  Rng rng(77);
  for (int i = 0; i < 100; ++i) {
    const PinGraph g = testing::RandomConnectedGraph(rng, 4, 60);
    const TokenSequence s = Encode(g, rng.Next());
    EXPECT_EQ(s.tokens.size(), 2u * g.num_edges() + 1);
    EXPECT_TRUE(VerifyEuler(s, g).ok);
    EXPECT_EQ(Decode(s), g);
  }
}

TEST(EulerTest, EncodeErrors) {
  const std::vector<EdgeSpec> no_vss = {{testing::Pin("R1"),
                                         testing::Pin("R1_P"),
                                         EdgeClass::kStructural}};
  EXPECT_EQ(CodeOf([&] { Encode(PinGraph::FromEdges({}, no_vss), 0); }),
            ErrorCode::kMissingVss);
  const PinGraph lonely = PinGraph::FromEdges({testing::Pin("VSS")}, {});
  EXPECT_EQ(CodeOf([&] { Encode(lonely, 0); }), ErrorCode::kDisconnected);
  std::vector<EdgeSpec> split = no_vss;
  split.push_back({testing::Pin("VSS"), testing::Pin("R2_P"),
                   EdgeClass::kConnection});
  EXPECT_EQ(CodeOf([&] { Encode(PinGraph::FromEdges({}, split), 0); }),
            ErrorCode::kDisconnected);
}

TEST(EulerTest, DecodeErrors) {
  EXPECT_EQ(CodeOf([] { Decode(Seq("VSS TRUNCATE")); }),
            ErrorCode::kEmptySequence);
  EXPECT_EQ(CodeOf([] { Decode(Seq("VSS NM1_Q VSS TRUNCATE")); }),
            ErrorCode::kUnknownToken);
  try {
    Decode(Seq("VSS NM1_S VDD VSS TRUNCATE"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllegalEdge);
    EXPECT_EQ(e.detail(), "VDD,VSS");
  }
}

TEST(EulerTest, DecodeCompletesDeviceStars) {
  const PinGraph g = Decode(Seq("VSS NM1_S NM1_D VSS TRUNCATE"));
  EXPECT_EQ(g.num_nodes(), 6);
  EXPECT_EQ(g.num_edges(), 3 + 4);
}

TEST(EulerTest, VerifyEulerViolations) {
  const PinGraph g = testing::CapacitorGraph();
  const TokenSequence good = Encode(g, 1);
  EXPECT_EQ(VerifyEuler(Seq("TRUNCATE"), g).reason, EulerViolation::kEmpty);
  EXPECT_EQ(VerifyEuler(Seq("C1 C1_P VSS TRUNCATE"), g).reason,
            EulerViolation::kNotAnchored);
  TokenSequence open = good;
  open.tokens.pop_back();
  EXPECT_EQ(VerifyEuler(open, g).reason, EulerViolation::kNotClosed);
  EXPECT_EQ(VerifyEuler(Seq("VSS C1_P VSS C1_P VSS TRUNCATE"), g).reason,
            EulerViolation::kArcReused);
  EXPECT_EQ(VerifyEuler(Seq("VSS C1_P VSS TRUNCATE"), g).reason,
            EulerViolation::kArcsMissing);
  EXPECT_EQ(VerifyEuler(Seq("VSS C1 VSS TRUNCATE"), g).reason,
            EulerViolation::kNotAnEdge);
  EXPECT_EQ(VerifyEuler(Seq("VSS BOGUS VSS TRUNCATE"), g).reason,
            EulerViolation::kUnknownToken);
}

TEST(EulerTest, SequenceTextFormat) {
  const TokenSequence s = Encode(testing::CapacitorGraph(), 3);
  const std::string line = FormatSequenceLine(s);
  EXPECT_EQ(line.substr(line.size() - 9), " TRUNCATE");
  EXPECT_EQ(ParseSequenceLine(line), s);
  std::stringstream buf;
  const std::vector<TokenSequence> seqs = {s, Encode(testing::TwoDeviceGraph(), 1)};
  WriteSequences(buf, seqs);
  EXPECT_EQ(ReadSequences(buf), seqs);
  EXPECT_EQ(ParseSequenceLine("VSS A B").tokens.size(), 3u);
  EXPECT_EQ(ParseSequenceLine("VSS A TRUNCATE B C").tokens.size(), 2u);
}

}  // namespace
}  // namespace genie
