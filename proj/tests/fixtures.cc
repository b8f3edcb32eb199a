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

#include "fixtures.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "genie/error.h"

namespace genie::testing {

std::string CorpusDir() { return GENIE_CORPUS_DIR; }

const CircuitStore& Corpus() {
  static const CircuitStore store = [] {
    IngestResult r = IngestDirectory(CorpusDir());
    if (!r.failures.empty()) {
      throw std::runtime_error("corpus failed to parse: " +
                               r.failures.front().file);
    }
    return r.store;
  }();
  return store;
}

NodeKey Pin(std::string_view name) {
  auto key = ParseNodeName(name);
  if (!key) throw std::invalid_argument(std::string(name));
  return *key;
}

Net MakeNet(std::string name, std::initializer_list<std::string_view> members) {
  Net net{std::move(name), {}};
  for (std::string_view m : members) net.members.push_back(Pin(m));
  return net;
}

Topology CapacitorTopology() {
  const Device c1{*FindKind("C"), 1};
  return {{c1},
          {MakeNet("a", {"C1_P", "VSS"}), MakeNet("b", {"C1_N", "VSS"})}};
}

PinGraph CapacitorGraph() { return BuildGraph(CapacitorTopology()); }

PinGraph TriangleGraph() {
  const NodeKey vss = Pin("VSS"), a = Pin("R1_P"), b = Pin("R2_P");
  const std::vector<EdgeSpec> edges = {{vss, a, EdgeClass::kConnection},
                                       {vss, b, EdgeClass::kConnection},
                                       {a, b, EdgeClass::kConnection}};
  return PinGraph::FromEdges({}, edges);
}

Topology TwoDeviceTopology() {
  const Device nm1{*FindKind("NM"), 1};
  const Device pm1{*FindKind("PM"), 1};
  return {{nm1, pm1},
          {MakeNet("VSS", {"VSS", "NM1_S", "NM1_B"}),
           MakeNet("VDD", {"VDD", "PM1_S", "PM1_B"}),
           MakeNet("VOUT1", {"VOUT1", "NM1_D", "PM1_D", "PM1_G"}),
           MakeNet("VIN1", {"VIN1", "NM1_G"})}};
}

PinGraph TwoDeviceGraph() { return BuildGraph(TwoDeviceTopology()); }

namespace {

KindId RandomKind(Rng& rng) {
  return static_cast<KindId>(rng.Below(DeviceKinds().size()));
}

std::uint16_t FreshIndex(Rng& rng, KindId kind,
                         std::set<std::pair<KindId, int>>& used) {
  const int max = GetKind(kind).max_count;
  for (;;) {
    const int index = 1 + static_cast<int>(rng.Below(max));
    if (used.insert({kind, index}).second) {
      return static_cast<std::uint16_t>(index);
    }
  }
}

}  // namespace

PinGraph RandomConnectedGraph(Rng& rng, int min_nodes, int max_nodes) {
  const int target =
      min_nodes + static_cast<int>(rng.Below(max_nodes - min_nodes + 1));
  std::set<std::pair<KindId, int>> used;
  std::vector<std::vector<NodeKey>> components;
  std::vector<EdgeSpec> edges;
  std::vector<NodeKey> pins;
  int nodes = 1;  // VSS
  for (;;) {
    const KindId kind = RandomKind(rng);
    const int roles = static_cast<int>(GetKind(kind).roles.size());
    if (nodes + 1 + roles > target) {
      if (!components.empty()) break;
      continue;
    }
    const Device d{kind, FreshIndex(rng, kind, used)};
    std::vector<NodeKey> comp = {NodeKey::MakeDevice(d)};
    for (int r = 0; r < roles; ++r) {
      const NodeKey pin = NodeKey::MakePin(d, r);
      comp.push_back(pin);
      pins.push_back(pin);
      edges.push_back({comp.front(), pin, EdgeClass::kStructural});
    }
    components.push_back(std::move(comp));
    nodes += 1 + roles;
  }
  // Fill the remaining budget with terminals; VSS is always one of them.
  std::vector<TerminalId> terminals = {VssTerminal()};
  const auto names = TerminalNames();
  while (nodes < target) {
    const auto t = static_cast<TerminalId>(rng.Below(names.size()));
    if (std::find(terminals.begin(), terminals.end(), t) != terminals.end()) {
      continue;
    }
    terminals.push_back(t);
    ++nodes;
  }
  for (TerminalId t : terminals) {
    components.push_back({NodeKey::MakeTerminal(t)});
  }
  // Device stars come first so every later component has a pin to attach to.
  std::span<std::vector<NodeKey>> tail(components.begin() + 1,
                                       components.end());
  rng.Shuffle(tail);
  std::vector<NodeKey> attached_pins;
  auto pick = [&rng](const std::vector<NodeKey>& v) {
    return v[rng.Below(v.size())];
  };
  for (const auto& comp : components) {
    std::vector<NodeKey> comp_pins;
    for (const NodeKey& k : comp) {
      if (k.IsPin()) comp_pins.push_back(k);
    }
    if (!attached_pins.empty()) {
      const NodeKey here = comp_pins.empty() ? comp.front() : pick(comp_pins);
      edges.push_back({pick(attached_pins), here, EdgeClass::kConnection});
    }
    attached_pins.insert(attached_pins.end(), comp_pins.begin(),
                         comp_pins.end());
  }
  std::vector<NodeKey> endpoints = pins;
  for (TerminalId t : terminals) endpoints.push_back(NodeKey::MakeTerminal(t));
  const int extra = static_cast<int>(rng.Below(target + 1));
  for (int i = 0; i < extra; ++i) {
    const NodeKey a = pick(pins);
    const NodeKey b = pick(endpoints);
    if (a == b) continue;
    edges.push_back({a, b, EdgeClass::kConnection});
  }
  return PinGraph::FromEdges({}, edges);
}

Topology RandomSmallTopology(Rng& rng, int max_nodes) {
  // Kinds with at most four pins keep three devices under the node budget.
  static const std::vector<std::string> kSmallKinds = {"NM", "PM", "NPN", "PNP",
                                                       "R",  "C",  "L",   "DIO"};
  static const std::vector<std::string> kPorts = {"VDD", "VIN1", "VOUT1", "VB1"};
  for (;;) {
    Topology t;
    std::set<std::pair<KindId, int>> used;
    std::vector<NodeKey> pins;
    int nodes = 1;
    const int devices = 1 + static_cast<int>(rng.Below(3));
    for (int i = 0; i < devices; ++i) {
      const KindId kind =
          *FindKind(kSmallKinds[rng.Below(kSmallKinds.size())]);
      const int roles = static_cast<int>(GetKind(kind).roles.size());
      if (nodes + 1 + roles > max_nodes) break;
      // Small indices so independent draws often coincide.
      const Device d{kind, static_cast<std::uint16_t>(1 + rng.Below(2))};
      if (!used.insert({kind, d.index}).second) continue;
      t.devices.push_back(d);
      for (int r = 0; r < roles; ++r) pins.push_back(NodeKey::MakePin(d, r));
      nodes += 1 + roles;
    }
    if (t.devices.empty()) continue;
    // Random partition of the pins into nets; VSS and a few ports join some.
    const int net_count = 1 + static_cast<int>(rng.Below(pins.size()));
    std::vector<Net> nets(net_count);
    for (int i = 0; i < net_count; ++i) nets[i].name = "n" + std::to_string(i);
    for (const NodeKey& p : pins) nets[rng.Below(net_count)].members.push_back(p);
    std::vector<NodeKey> terminals = {NodeKey::MakeTerminal(VssTerminal())};
    for (const std::string& port : kPorts) {
      if (nodes + static_cast<int>(terminals.size()) < max_nodes &&
          rng.Below(3) == 0) {
        terminals.push_back(Pin(port));
      }
    }
    std::vector<int> open;
    for (int i = 0; i < net_count; ++i) {
      if (!nets[i].members.empty()) open.push_back(i);
    }
    rng.Shuffle(std::span<int>(open));
    for (std::size_t i = 0; i < terminals.size() && i < open.size(); ++i) {
      nets[open[i]].members.push_back(terminals[i]);
    }
    std::erase_if(nets, [](const Net& n) { return n.members.empty(); });
    t.nets = std::move(nets);
    try {
      const PinGraph g = BuildGraph(t);
      if (g.num_nodes() <= max_nodes && g.VssIndex()) return t;
    } catch (const Error&) {
      // Disconnected draw; try again.
    }
  }
}

DeviceRenumbering RandomRenumbering(Rng& rng, const PinGraph& g) {
  std::map<KindId, std::vector<std::uint16_t>> present;
  for (const NodeKey& k : g.nodes()) {
    if (k.IsDevice()) present[k.kind].push_back(k.index);
  }
  DeviceRenumbering map;
  for (auto& [kind, indices] : present) {
    std::vector<std::uint16_t> pool;
    for (int i = 1; i <= GetKind(kind).max_count; ++i) {
      pool.push_back(static_cast<std::uint16_t>(i));
    }
    rng.Shuffle(std::span<std::uint16_t>(pool));
    for (std::size_t i = 0; i < indices.size(); ++i) {
      map[{kind, indices[i]}] = {kind, pool[i]};
    }
  }
  return map;
}

}  // namespace genie::testing

namespace genie::testing {

std::vector<NegativeCase> NegativeCases() {
  const Device nm1{*FindKind("NM"), 1}, pm1{*FindKind("PM"), 1};
  const Device r1{*FindKind("R"), 1}, r2{*FindKind("R"), 2};
  const Device c1{*FindKind("C"), 1};
  const Device inv1{*FindKind("INV"), 1};
  std::vector<NegativeCase> cases;
  cases.push_back({"floating gate",
                   {{nm1},
                    {MakeNet("VSS", {"VSS", "NM1_S", "NM1_B"}),
                     MakeNet("VOUT1", {"VOUT1", "NM1_D"})}},
                   ViolationCode::kFloatingPin});
  cases.push_back({"pin alone in its net",
                   {{r1, r2},
                    {MakeNet("VSS", {"VSS", "R1_N", "R2_N"}),
                     MakeNet("a", {"R1_P"}), MakeNet("VIN1", {"VIN1", "R2_P"})}},
                   ViolationCode::kFloatingPin});
  cases.push_back({"vdd shorted to vss",
                   {{r1},
                    {MakeNet("VSS", {"VSS", "VDD", "R1_N"}),
                     MakeNet("VIN1", {"VIN1", "R1_P"})}},
                   ViolationCode::kTerminalShort});
  cases.push_back({"input shorted to output",
                   {{r1},
                    {MakeNet("VSS", {"VSS", "R1_N"}),
                     MakeNet("io", {"VIN1", "VOUT1", "R1_P"})}},
                   ViolationCode::kTerminalShort});
  cases.push_back({"two islands",
                   {{r1, r2},
                    {MakeNet("VSS", {"VSS", "R1_N"}),
                     MakeNet("VIN1", {"VIN1", "R1_P"}),
                     MakeNet("a", {"R2_P", "VOUT1"}),
                     MakeNet("b", {"R2_N", "VB1"})}},
                   ViolationCode::kDisconnected});
  cases.push_back({"shorted capacitor",
                   {{c1}, {MakeNet("VSS", {"VSS", "C1_P", "C1_N"})}},
                   ViolationCode::kDegenerateDevice});
  cases.push_back({"transistor with all pins tied",
                   {{nm1, r1},
                    {MakeNet("x", {"NM1_D", "NM1_G", "NM1_S", "NM1_B", "R1_P"}),
                     MakeNet("VSS", {"VSS", "R1_N"})}},
                   ViolationCode::kDegenerateDevice});
  cases.push_back({"no ground",
                   {{r1},
                    {MakeNet("VDD", {"VDD", "R1_P"}),
                     MakeNet("VOUT1", {"VOUT1", "R1_N"})}},
                   ViolationCode::kNoVss});
  cases.push_back({"no devices", {{}, {}}, ViolationCode::kNoDevices});
  cases.push_back({"inverter rails floating",
                   {{inv1, pm1},
                    {MakeNet("VSS", {"VSS", "INV1_VSS"}),
                     MakeNet("VIN1", {"VIN1", "INV1_A"}),
                     MakeNet("q", {"INV1_Q", "PM1_G"}),
                     MakeNet("VDD", {"VDD", "PM1_S", "PM1_B"}),
                     MakeNet("VOUT1", {"VOUT1", "PM1_D"})}},
                   ViolationCode::kFloatingPin});
  return cases;
}

}  // namespace genie::testing
