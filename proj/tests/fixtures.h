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

#ifndef GENIE_TESTS_FIXTURES_H_
#define GENIE_TESTS_FIXTURES_H_

// Shared circuits and random generators for the unit and acceptance tests.

#include <string>
#include <vector>

#include "genie/canonical.h"
#include "genie/catalog.h"
#include "genie/rng.h"
#include "genie/store.h"
#include "genie/topology.h"
#include "genie/validity.h"

namespace genie::testing {

std::string CorpusDir();

// Bundled corpus, file-name order.
const CircuitStore& Corpus();

NodeKey Pin(std::string_view name);
Net MakeNet(std::string name, std::initializer_list<std::string_view> members);

// C1 with each pin in its own net to VSS: 4 nodes, 2 structural and 2
// connection edges.
Topology CapacitorTopology();
PinGraph CapacitorGraph();

// VSS, R1_P, R2_P joined pairwise by connection edges.
PinGraph TriangleGraph();

// NM1 and PM1 as a diode-loaded common-source stage: 14 nodes, 21 edges.
Topology TwoDeviceTopology();
PinGraph TwoDeviceGraph();

// Connected legal pin graph with complete device stars, VSS present and
// between min_nodes and max_nodes nodes.
PinGraph RandomConnectedGraph(Rng& rng, int min_nodes, int max_nodes);

// Random net-level circuit whose clique graph is connected and has at most
// `max_nodes` nodes.
Topology RandomSmallTopology(Rng& rng, int max_nodes);

struct NegativeCase {
  std::string name;
  Topology topology;
  ViolationCode expected;
};

// Hand-built invalid circuits, each with the violation it must raise.
std::vector<NegativeCase> NegativeCases();

// Random bijection of device indices within each kind, drawn from the
// indices 1..max_count.
DeviceRenumbering RandomRenumbering(Rng& rng, const PinGraph& g);

}  // namespace genie::testing

#endif  // GENIE_TESTS_FIXTURES_H_
