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

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "genie/error.h"
#include "json.hpp"

namespace genie {

std::string_view ViolationName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kFloatingPin: return "FLOATING_PIN";
    case ViolationCode::kTerminalShort: return "TERMINAL_SHORT";
    case ViolationCode::kDisconnected: return "DISCONNECTED";
    case ViolationCode::kNoVss: return "NO_VSS";
    case ViolationCode::kNoDevices: return "NO_DEVICES";
    case ViolationCode::kDegenerateDevice: return "DEGENERATE_DEVICE";
    case ViolationCode::kUnknownToken: return "UNKNOWN_TOKEN";
    case ViolationCode::kIllegalEdge: return "ILLEGAL_EDGE";
    case ViolationCode::kEmptySequence: return "EMPTY_SEQUENCE";
  }
  return "UNKNOWN";
}

bool ValidityReport::Has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [code](const Violation& v) { return v.code == code; });
}

ValidityReport CheckTopology(const Topology& raw) {
  ValidityReport report;
  auto add = [&report](ViolationCode code, std::string detail) {
    report.violations.push_back({code, std::move(detail)});
  };
  const Topology t = Normalize(raw);

  if (t.devices.empty()) add(ViolationCode::kNoDevices, "");
  const auto terminals = Terminals(t);
  if (std::find(terminals.begin(), terminals.end(), VssTerminal()) ==
      terminals.end()) {
    add(ViolationCode::kNoVss, "");
  }

  std::map<NodeKey, std::size_t> net_of;
  for (std::size_t i = 0; i < t.nets.size(); ++i) {
    for (const NodeKey& m : t.nets[i].members) net_of.emplace(m, i);
  }

  for (const Device& d : t.devices) {
    const int roles = static_cast<int>(GetKind(d.kind).roles.size());
    std::set<std::size_t> nets_used;
    bool all_connected = true;
    for (int r = 0; r < roles; ++r) {
      const NodeKey pin = NodeKey::MakePin(d, r);
      auto it = net_of.find(pin);
      if (it == net_of.end()) {
        all_connected = false;
        add(ViolationCode::kFloatingPin, NodeName(pin));
        continue;
      }
      nets_used.insert(it->second);
      if (t.nets[it->second].members.size() < 2) {
        add(ViolationCode::kFloatingPin, NodeName(pin));
      }
    }
    if (all_connected && roles > 1 && nets_used.size() == 1) {
      add(ViolationCode::kDegenerateDevice, d.Name());
    }
  }

  for (const Net& net : t.nets) {
    std::vector<std::string> names;
    for (const NodeKey& m : net.members) {
      if (m.IsTerminal()) names.push_back(NodeName(m));
    }
    if (names.size() > 1) {
      std::string detail;
      for (const auto& n : names) detail += (detail.empty() ? "" : ",") + n;
      add(ViolationCode::kTerminalShort, detail);
    }
  }

  // Bipartite device/net connectivity.
  const std::size_t nd = t.devices.size();
  std::vector<std::size_t> parent(nd + t.nets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < t.nets.size(); ++i) {
    for (const NodeKey& m : t.nets[i].members) {
      if (!m.IsPin()) continue;
      auto dev = std::lower_bound(t.devices.begin(), t.devices.end(), m.Owner());
      if (dev == t.devices.end() || *dev != m.Owner()) continue;
      parent[find(static_cast<std::size_t>(dev - t.devices.begin()))] =
          find(nd + i);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
  if (roots.size() > 1) {
    add(ViolationCode::kDisconnected,
        std::to_string(roots.size()) + " components");
  }

  report.valid = report.violations.empty();
  return report;
}

ValidityReport CheckSequence(const TokenSequence& s) {
  ValidityReport report;
  auto fail = [&report](ViolationCode code, std::string detail) {
    report.violations.push_back({code, std::move(detail)});
    report.valid = false;
    return report;
  };
  std::vector<NodeKey> walk;
  try {
    walk = ParseTokens(s);
  } catch (const Error& e) {
    return fail(ViolationCode::kUnknownToken, e.detail());
  }
  if (walk.size() < 2) return fail(ViolationCode::kEmptySequence, "");
  try {
    CheckLegalEdges(walk);
  } catch (const Error& e) {
    return fail(ViolationCode::kIllegalEdge, e.detail());
  }
  const PinGraph g = Decode(s);
  report = CheckTopology(NetsFromGraph(g));
  report.euler_strict = VerifyEuler(s, g).ok;
  return report;
}

std::string ReportJsonLine(std::size_t seq_index, const ValidityReport& r) {
  nlohmann::ordered_json j;
  j["seq_index"] = seq_index;
  j["verdict"] = r.valid ? "Valid" : "Invalid";
  j["violations"] = nlohmann::json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json item;
    item["code"] = ViolationName(v.code);
    item["detail"] = v.detail;
    j["violations"].push_back(item);
  }
  j["euler_strict"] = r.euler_strict;
  return j.dump();
}

}  // namespace genie
