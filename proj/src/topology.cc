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

#include "genie/topology.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "genie/error.h"

namespace genie {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Topology Normalize(const Topology& t) {
  Topology out;
  out.devices = t.devices;
  std::sort(out.devices.begin(), out.devices.end());
  out.devices.erase(std::unique(out.devices.begin(), out.devices.end()),
                    out.devices.end());

  DisjointSets sets(t.nets.size());
  std::map<NodeKey, std::size_t> first_owner;
  for (std::size_t i = 0; i < t.nets.size(); ++i) {
    for (const NodeKey& m : t.nets[i].members) {
      auto [it, inserted] = first_owner.emplace(m, i);
      if (!inserted) sets.Union(it->second, i);
    }
  }
  std::map<std::size_t, Net> merged;
  for (std::size_t i = 0; i < t.nets.size(); ++i) {
    Net& net = merged[sets.Find(i)];
    if (net.name.empty()) net.name = t.nets[i].name;
    net.members.insert(net.members.end(), t.nets[i].members.begin(),
                       t.nets[i].members.end());
  }
  for (auto& [root, net] : merged) {
    std::sort(net.members.begin(), net.members.end());
    net.members.erase(std::unique(net.members.begin(), net.members.end()),
                      net.members.end());
    if (!net.members.empty()) out.nets.push_back(std::move(net));
  }
  std::sort(out.nets.begin(), out.nets.end(),
            [](const Net& a, const Net& b) { return a.members < b.members; });
  return out;
}

bool Equivalent(const Topology& a, const Topology& b) {
  const Topology na = Normalize(a);
  const Topology nb = Normalize(b);
  if (na.devices != nb.devices || na.nets.size() != nb.nets.size()) {
    return false;
  }
  for (std::size_t i = 0; i < na.nets.size(); ++i) {
    if (na.nets[i].members != nb.nets[i].members) return false;
  }
  return true;
}

std::vector<TerminalId> Terminals(const Topology& t) {
  std::set<TerminalId> seen;
  for (const Net& net : t.nets) {
    for (const NodeKey& m : net.members) {
      if (m.IsTerminal()) seen.insert(m.terminal);
    }
  }
  return {seen.begin(), seen.end()};
}

void CheckTopologyInvariants(const Topology& t) {
  std::set<Device> devices;
  for (const Device& d : t.devices) {
    if (d.kind >= DeviceKinds().size() || d.index < 1 ||
        d.index > GetKind(d.kind).max_count) {
      throw Error(ErrorCode::kInvalidTopology, "device index out of range");
    }
    if (!devices.insert(d).second) {
      throw Error(ErrorCode::kInvalidTopology, "duplicate device " + d.Name());
    }
  }
  std::set<NodeKey> seen_pins;
  for (const Net& net : t.nets) {
    std::set<NodeKey> in_net;
    for (const NodeKey& m : net.members) {
      if (!in_net.insert(m).second) {
        throw Error(ErrorCode::kInvalidTopology,
                    "net " + net.name + " lists " + NodeName(m) + " twice");
      }
      if (m.IsDevice()) {
        throw Error(ErrorCode::kInvalidTopology,
                    "device node in net " + net.name);
      }
      if (m.IsTerminal()) {
        if (m.terminal >= TerminalNames().size()) {
          throw Error(ErrorCode::kInvalidTopology, "unknown terminal");
        }
        continue;
      }
      if (!devices.contains(m.Owner()) || m.role < 0 ||
          m.role >= static_cast<int>(GetKind(m.kind).roles.size())) {
        throw Error(ErrorCode::kInvalidTopology,
                    "net " + net.name + " references unknown pin");
      }
      if (!seen_pins.insert(m).second) {
        throw Error(ErrorCode::kInvalidTopology,
                    NodeName(m) + " appears in more than one net");
      }
    }
  }
}

std::optional<EdgeClass> ExpectedEdgeClass(const NodeKey& a,
                                           const NodeKey& b) {
  if (a == b) return std::nullopt;
  const NodeKey& lo = a.cls <= b.cls ? a : b;
  const NodeKey& hi = a.cls <= b.cls ? b : a;
  switch (lo.cls) {
    case NodeClass::kTerminal:
      if (hi.IsPin()) return EdgeClass::kConnection;
      return std::nullopt;
    case NodeClass::kDevice:
      if (hi.IsPin() && hi.Owner() == lo.Owner()) return EdgeClass::kStructural;
      return std::nullopt;
    case NodeClass::kPin:
      return EdgeClass::kConnection;
  }
  return std::nullopt;
}

PinGraph PinGraph::FromEdges(std::vector<NodeKey> nodes,
                             std::span<const EdgeSpec> edges) {
  for (const EdgeSpec& e : edges) {
    nodes.push_back(e.a);
    nodes.push_back(e.b);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  PinGraph g;
  g.nodes_ = std::move(nodes);
  auto index = [&g](const NodeKey& k) {
    return static_cast<int>(
        std::lower_bound(g.nodes_.begin(), g.nodes_.end(), k) -
        g.nodes_.begin());
  };
  g.edges_.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    int u = index(e.a);
    int v = index(e.b);
    if (u == v) {
      throw Error(ErrorCode::kIllegalEdge, "self-loop on " + NodeName(e.a));
    }
    if (u > v) std::swap(u, v);
    g.edges_.push_back({u, v, e.cls});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end(),
                             [](const Edge& x, const Edge& y) {
                               return x.u == y.u && x.v == y.v;
                             }),
                 g.edges_.end());

  const int n = g.num_nodes();
  std::vector<int> degree(n, 0);
  for (const Edge& e : g.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.adjacency_.assign(g.offsets_[n], 0);
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (int i = 0; i < n; ++i) {
    std::sort(g.adjacency_.begin() + g.offsets_[i],
              g.adjacency_.begin() + g.offsets_[i + 1]);
  }
  return g;
}

std::optional<int> PinGraph::IndexOf(const NodeKey& key) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), key);
  if (it == nodes_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - nodes_.begin());
}

std::optional<int> PinGraph::VssIndex() const {
  return IndexOf(NodeKey::MakeTerminal(VssTerminal()));
}

bool PinGraph::HasEdge(int u, int v) const {
  auto nb = Neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool PinGraph::IsConnected() const {
  if (nodes_.empty()) return false;
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : Neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == nodes_.size();
}

PinGraph BuildGraph(const Topology& t, NetExpansion expansion) {
  CheckTopologyInvariants(t);
  if (t.devices.empty()) {
    throw Error(ErrorCode::kEmptyTopology, "topology has no devices");
  }
  std::vector<NodeKey> nodes;
  std::vector<EdgeSpec> edges;
  for (const Device& d : t.devices) {
    const NodeKey dev = NodeKey::MakeDevice(d);
    nodes.push_back(dev);
    const int roles = static_cast<int>(GetKind(d.kind).roles.size());
    for (int r = 0; r < roles; ++r) {
      const NodeKey pin = NodeKey::MakePin(d, r);
      nodes.push_back(pin);
      edges.push_back({dev, pin, EdgeClass::kStructural});
    }
  }
  for (const Net& net : t.nets) {
    std::vector<NodeKey> members = net.members;
    std::sort(members.begin(), members.end());
    const bool has_pin =
        std::any_of(members.begin(), members.end(),
                    [](const NodeKey& m) { return m.IsPin(); });
    if (!has_pin && members.size() > 1) {
      throw Error(ErrorCode::kInvalidTopology,
                  "net " + net.name + " joins terminals without any pin");
    }
    nodes.insert(nodes.end(), members.begin(), members.end());
    if (expansion == NetExpansion::kClique) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (members[i].IsTerminal() && members[j].IsTerminal()) continue;
          edges.push_back({members[i], members[j], EdgeClass::kConnection});
        }
      }
    } else if (members.size() > 1) {
      // Terminals sort first; extra terminals hang off the first pin.
      const NodeKey root = members.front();
      const NodeKey pin_root =
          *std::find_if(members.begin(), members.end(),
                        [](const NodeKey& m) { return m.IsPin(); });
      for (std::size_t i = 1; i < members.size(); ++i) {
        const NodeKey& hub = members[i].IsTerminal() ? pin_root : root;
        if (hub != members[i]) {
          edges.push_back({hub, members[i], EdgeClass::kConnection});
        }
      }
    }
  }
  PinGraph g = PinGraph::FromEdges(std::move(nodes), edges);
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected, "topology graph is not connected");
  }
  return g;
}

Topology NetsFromGraph(const PinGraph& g) {
  const int n = g.num_nodes();
  DisjointSets sets(n);
  for (const PinGraph::Edge& e : g.edges()) {
    const NodeKey& a = g.node(e.u);
    const NodeKey& b = g.node(e.v);
    const auto expected = ExpectedEdgeClass(a, b);
    if (!expected || *expected != e.cls) {
      throw Error(ErrorCode::kIllegalEdgeClass,
                  NodeName(a) + " -- " + NodeName(b));
    }
    if (e.cls == EdgeClass::kConnection) sets.Union(e.u, e.v);
  }

  Topology t;
  std::map<std::size_t, Net> components;
  for (int i = 0; i < n; ++i) {
    const NodeKey& k = g.node(i);
    if (k.IsDevice() || k.IsPin()) t.devices.push_back(k.Owner());
    if (k.IsDevice()) continue;
    components[sets.Find(i)].members.push_back(k);
  }
  std::sort(t.devices.begin(), t.devices.end());
  t.devices.erase(std::unique(t.devices.begin(), t.devices.end()),
                  t.devices.end());

  for (auto& [root, net] : components) {
    std::sort(net.members.begin(), net.members.end());
    t.nets.push_back(std::move(net));
  }
  std::sort(t.nets.begin(), t.nets.end(),
            [](const Net& a, const Net& b) { return a.members < b.members; });
  int internal = 0;
  for (Net& net : t.nets) {
    if (net.members.front().IsTerminal()) {
      net.name = NodeName(net.members.front());
    } else {
      net.name = "n" + std::to_string(++internal);
    }
  }
  return t;
}

}  // namespace genie
