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

#ifndef GENIE_CANONICAL_H_
#define GENIE_CANONICAL_H_

#include <map>
#include <string>
#include <vector>

#include "genie/topology.h"

namespace genie {

using DeviceRenumbering = std::map<Device, Device>;

struct CanonicalLabeling {
  std::vector<NodeKey> node_order;  // canonical names, VSS first
  DeviceRenumbering device_renumbering;  // input device -> canonical device
};

struct CanonicalForm {
  PinGraph graph;
  CanonicalLabeling labeling;
};

// Renames devices; `renumbering` must be a bijection within each kind.
// Devices missing from the map keep their index.
PinGraph RelabelDevices(const PinGraph& g, const DeviceRenumbering& renumbering);

// Canonical device numbering. Nodes are ordered by breadth-first search from
// VSS with frontier neighbours sorted by (class, kind, degree descending, pin
// role, structural colour); devices are renumbered 1, 2, ... per kind in
// first-visit order.
//
// The structural colour comes from colour refinement over index-free node
// types. Ties that refinement cannot split are resolved by trying each
// candidate and keeping the labeling with the lexicographically smallest
// relabeled edge list, so the result depends only on the isomorphism class.
// The search is capped at `kMaxLeaves` complete labelings; past the cap the
// best labeling found so far is used.
//
// Throws MissingVSS or Disconnected.
CanonicalForm Canonicalize(const PinGraph& g);

inline constexpr int kMaxLeaves = 4096;

// Lowercase hex SHA-256 of the canonical edge list (edge class included).
std::string CanonicalHash(const PinGraph& g);

// Hash of the net-level circuit: the topology is normalized and re-expanded
// with clique nets before hashing, so graphs that differ only in how a net's
// pins are wired together hash equally.
std::string TopologyHash(const Topology& t);

// Brute-force class/kind/role preserving isomorphism test for graphs of at
// most 16 nodes. Throws TooLarge otherwise.
bool IsomorphicOracle(const PinGraph& a, const PinGraph& b);

inline constexpr int kOracleMaxNodes = 16;

}  // namespace genie

#endif  // GENIE_CANONICAL_H_
