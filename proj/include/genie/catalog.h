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

#ifndef GENIE_CATALOG_H_
#define GENIE_CATALOG_H_

// Device kinds, terminal names and the node identities built from them.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace genie {

using KindId = std::uint8_t;
using TerminalId = std::uint16_t;

struct DeviceKind {
  std::string_view name;
  std::string_view prefix;  // token prefix, e.g. "NM" in "NM3_D"
  std::span<const std::string_view> roles;
  int max_count;
};

// Built-in kinds in lookup-table order: NM PM NPN PNP R C L DIO XOR INV TG.
std::span<const DeviceKind> DeviceKinds();
const DeviceKind& GetKind(KindId kind);
std::optional<KindId> FindKind(std::string_view name);

// Ordered pin roles of a registered kind; throws UnknownKind otherwise.
std::span<const std::string_view> PinRoles(std::string_view kind_name);

// Built-in terminal names. VSS is always present and is the sequence anchor.
std::span<const std::string_view> TerminalNames();
std::optional<TerminalId> FindTerminal(std::string_view name);
TerminalId VssTerminal();
TerminalId VddTerminal();

// Node class order doubles as the canonical class rank.
enum class NodeClass : std::uint8_t { kTerminal = 0, kDevice = 1, kPin = 2 };

struct Device {
  KindId kind = 0;
  std::uint16_t index = 0;  // 1-based within kind

  auto operator<=>(const Device&) const = default;
  std::string Name() const;
};

// A graph node. Its identity is its token name ("NM1", "NM1_D", "VSS").
struct NodeKey {
  NodeClass cls = NodeClass::kTerminal;
  KindId kind = 0;
  std::uint16_t index = 0;
  std::int8_t role = -1;
  TerminalId terminal = 0;

  static constexpr NodeKey MakeTerminal(TerminalId t) {
    return {NodeClass::kTerminal, 0, 0, -1, t};
  }
  static constexpr NodeKey MakeDevice(Device d) {
    return {NodeClass::kDevice, d.kind, d.index, -1, 0};
  }
  static constexpr NodeKey MakePin(Device d, int role) {
    return {NodeClass::kPin, d.kind, d.index, static_cast<std::int8_t>(role),
            0};
  }

  bool IsTerminal() const { return cls == NodeClass::kTerminal; }
  bool IsDevice() const { return cls == NodeClass::kDevice; }
  bool IsPin() const { return cls == NodeClass::kPin; }
  Device Owner() const { return {kind, index}; }

  std::uint64_t Packed() const {
    return (static_cast<std::uint64_t>(cls) << 48) |
           (static_cast<std::uint64_t>(kind) << 40) |
           (static_cast<std::uint64_t>(index) << 24) |
           (static_cast<std::uint64_t>(static_cast<std::uint8_t>(role)) << 16) |
           terminal;
  }

  auto operator<=>(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    return std::hash<std::uint64_t>{}(k.Packed());
  }
};

std::string NodeName(const NodeKey& key);

// Parses a token name into a node. Returns nullopt for names that are not
// nodes (unknown prefixes, out-of-range indices, special tokens).
std::optional<NodeKey> ParseNodeName(std::string_view name);

inline bool IsVss(const NodeKey& key) {
  return key.IsTerminal() && key.terminal == VssTerminal();
}

}  // namespace genie

#endif  // GENIE_CATALOG_H_
