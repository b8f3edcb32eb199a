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

#ifndef GENIE_TOPOLOGY_H_
#define GENIE_TOPOLOGY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genie/catalog.h"

namespace genie {

struct Net {
  std::string name;
  std::vector<NodeKey> members;  // pin and terminal nodes
};

// Net-level circuit: devices plus the nets joining their pins. A terminal may
// appear in several nets; such nets are electrically one node and are merged
// by Normalize().
struct Topology {
  std::vector<Device> devices;
  std::vector<Net> nets;
};

// Sorted devices, terminal-sharing nets merged, members sorted, nets ordered by
// their smallest member. Net names are kept (first name wins on merge).
Topology Normalize(const Topology& t);

// Same device set and the same partition of pins/terminals into nets.
bool Equivalent(const Topology& a, const Topology& b);

std::vector<TerminalId> Terminals(const Topology& t);

// Throws InvalidTopology when a net references a missing device, a pin role
// is out of range, or a pin appears in two nets.
void CheckTopologyInvariants(const Topology& t);

enum class EdgeClass : std::uint8_t { kStructural = 0, kConnection = 1 };

// The class an edge between `a` and `b` must have, or nullopt when no edge
// may join them (self-loop, terminal-terminal, device-device, device-terminal,
// device-foreign pin).
std::optional<EdgeClass> ExpectedEdgeClass(const NodeKey& a, const NodeKey& b);

struct EdgeSpec {
  NodeKey a;
  NodeKey b;
  EdgeClass cls;
};

// Undirected pin-level graph. Nodes are stored sorted by NodeKey and edges as
// sorted (u < v) index pairs, so two graphs with the same node and edge sets
// compare equal.
class PinGraph {
 public:
  struct Edge {
    int u;
    int v;
    EdgeClass cls;
    auto operator<=>(const Edge&) const = default;
  };

  PinGraph() = default;

  // Self-loops are rejected with IllegalEdge; duplicate edges collapse.
  // Endpoints missing from `nodes` are added.
  static PinGraph FromEdges(std::vector<NodeKey> nodes,
                            std::span<const EdgeSpec> edges);

  std::span<const NodeKey> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> Neighbors(int node) const {
    return {adjacency_.data() + offsets_[node],
            adjacency_.data() + offsets_[node + 1]};
  }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int Degree(int node) const { return offsets_[node + 1] - offsets_[node]; }
  const NodeKey& node(int i) const { return nodes_[i]; }

  std::optional<int> IndexOf(const NodeKey& key) const;
  std::optional<int> VssIndex() const;
  bool HasEdge(int u, int v) const;
  bool IsConnected() const;

  bool operator==(const PinGraph& other) const {
    return nodes_ == other.nodes_ && edges_ == other.edges_;
  }

 private:
  std::vector<NodeKey> nodes_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<int> adjacency_;  // sorted per node
};

enum class NetExpansion { kClique, kStar };

// Device stars plus pin-level connection edges for every net. Throws
// EmptyTopology, DisconnectedTopology (kDisconnected) or InvalidTopology.
PinGraph BuildGraph(const Topology& t,
                    NetExpansion expansion = NetExpansion::kClique);

// Nets are the connected components of the connection-edge subgraph; devices
// are the owners of all device and pin nodes. Throws IllegalEdgeClass.
Topology NetsFromGraph(const PinGraph& g);

}  // namespace genie

#endif  // GENIE_TOPOLOGY_H_
