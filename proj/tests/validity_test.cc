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

#include "genie/validity.h"

#include <gtest/gtest.h>

#include "fixtures.h"

namespace genie {
namespace {

TEST(ValidityTest, CorpusIsValid) {
  for (const auto& c : testing::Corpus().circuits) {
    const ValidityReport r = CheckTopology(c.topology);
    EXPECT_TRUE(r.valid) << c.name << ": "
                         << (r.violations.empty() ? ""
                                                  : r.violations[0].detail);
  }
}

TEST(ValidityTest, NegativeCases) {
  const auto cases = testing::NegativeCases();
  ASSERT_EQ(cases.size(), 10u);
  for (const auto& c : cases) {
    const ValidityReport r = CheckTopology(c.topology);
    EXPECT_FALSE(r.valid) << c.name;
    EXPECT_TRUE(r.Has(c.expected)) << c.name;
  }
}

TEST(ValidityTest, ShortedCapacitorIsDegenerate) {
  // The two-net form is merged at VSS before checking.
  const ValidityReport r = CheckTopology(testing::CapacitorTopology());
  EXPECT_TRUE(r.Has(ViolationCode::kDegenerateDevice));
}

TEST(ValidityTest, EncodedCorpusSequencesAreStrictlyValid) {
  for (const auto& c : testing::Corpus().circuits) {
    const ValidityReport r =
        CheckSequence(Encode(BuildGraph(c.topology), 4));
    EXPECT_TRUE(r.valid) << c.name;
    EXPECT_TRUE(r.euler_strict) << c.name;
  }
}

TEST(ValidityTest, SequenceStages) {
  const ValidityReport illegal =
      CheckSequence(ParseSequenceLine("VSS VDD NM1_S VSS TRUNCATE"));
  ASSERT_EQ(illegal.violations.size(), 1u);
  EXPECT_EQ(illegal.violations[0].code, ViolationCode::kIllegalEdge);
  EXPECT_EQ(illegal.violations[0].detail, "VSS,VDD");
  EXPECT_TRUE(CheckSequence(ParseSequenceLine("VSS XYZ VSS TRUNCATE"))
                  .Has(ViolationCode::kUnknownToken));
  EXPECT_TRUE(CheckSequence(ParseSequenceLine("VSS TRUNCATE"))
                  .Has(ViolationCode::kEmptySequence));
}

TEST(ValidityTest, DroppedGateEdgeFloatsThePin) {
  // Remove the only connection of NM1_G and re-encode.
  const PinGraph g = testing::TwoDeviceGraph();
  std::vector<EdgeSpec> edges;
  for (const auto& e : g.edges()) {
    const std::string a = NodeName(g.node(e.u)), b = NodeName(g.node(e.v));
    if ((a == "VIN1" && b == "NM1_G") || (a == "NM1_G" && b == "VIN1")) continue;
    edges.push_back({g.node(e.u), g.node(e.v), e.cls});
  }
  std::erase_if(edges, [](const EdgeSpec& e) {
    return NodeName(e.a) == "VIN1" || NodeName(e.b) == "VIN1";
  });
  const PinGraph h = PinGraph::FromEdges({}, edges);
  const ValidityReport r = CheckSequence(Encode(h, 0));
  EXPECT_FALSE(r.valid);
  ASSERT_TRUE(r.Has(ViolationCode::kFloatingPin));
  bool named = false;
  for (const auto& v : r.violations) named |= v.detail.find("NM1_G") != std::string::npos;
  EXPECT_TRUE(named);
  EXPECT_TRUE(r.euler_strict);
}

TEST(ValidityTest, JsonLine) {
  const ValidityReport r =
      CheckSequence(ParseSequenceLine("VSS VDD NM1_S VSS TRUNCATE"));
  EXPECT_EQ(ReportJsonLine(3, r),
            "{\"seq_index\":3,\"verdict\":\"Invalid\",\"violations\":[{\"code\":"
            "\"ILLEGAL_EDGE\",\"detail\":\"VSS,VDD\"}],\"euler_strict\":false}");
}

}  // namespace
}  // namespace genie
