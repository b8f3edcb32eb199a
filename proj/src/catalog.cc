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

#include "genie/catalog.h"

#include <algorithm>
#include <array>
#include <charconv>

#include "genie/error.h"

namespace genie {
namespace {

constexpr std::array<std::string_view, 4> kMosRoles = {"D", "G", "S", "B"};
constexpr std::array<std::string_view, 3> kBjtRoles = {"C", "B", "E"};
constexpr std::array<std::string_view, 2> kTwoPinRoles = {"P", "N"};
constexpr std::array<std::string_view, 5> kXorRoles = {"A", "B", "VDD", "VSS",
                                                       "Y"};
constexpr std::array<std::string_view, 4> kInvRoles = {"A", "Q", "VDD", "VSS"};
constexpr std::array<std::string_view, 5> kTgRoles = {"A", "B", "C", "VDD",
                                                      "VSS"};

const std::array<DeviceKind, 11> kKinds = {{
    {"NM", "NM", kMosRoles, 25},
    {"PM", "PM", kMosRoles, 25},
    {"NPN", "NPN", kBjtRoles, 25},
    {"PNP", "PNP", kBjtRoles, 25},
    {"R", "R", kTwoPinRoles, 25},
    {"C", "C", kTwoPinRoles, 25},
    {"L", "L", kTwoPinRoles, 25},
    {"DIO", "DIO", kTwoPinRoles, 25},
    {"XOR", "XOR", kXorRoles, 5},
    {"INV", "INV", kInvRoles, 10},
    {"TG", "TG", kTgRoles, 10},
}};

constexpr std::array<std::string_view, 31> kTerminals = {
    "VIN1",    "VIN2",    "VIN3",    "VIN4",    "VIN5",  "IIN1",  "IIN2",
    "IIN3",    "IIN4",    "IIN5",    "VOUT1",   "VOUT2", "VOUT3", "VOUT4",
    "VOUT5",   "IOUT1",   "IOUT2",   "IOUT3",   "IOUT4", "IOUT5", "VB1",
    "VB2",     "VB3",     "VB4",     "VB5",     "LOGICQ1", "LOGICQ2",
    "LOGICQB1", "LOGICQB2", "VDD",   "VSS",
};

std::optional<int> ParseIndex(std::string_view digits) {
  if (digits.empty() || digits.size() > 4 || digits[0] == '0') {
    return std::nullopt;
  }
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

std::span<const DeviceKind> DeviceKinds() { return kKinds; }

const DeviceKind& GetKind(KindId kind) { return kKinds.at(kind); }

std::optional<KindId> FindKind(std::string_view name) {
  for (std::size_t i = 0; i < kKinds.size(); ++i) {
    if (kKinds[i].name == name) return static_cast<KindId>(i);
  }
  return std::nullopt;
}

std::span<const std::string_view> PinRoles(std::string_view kind_name) {
  auto kind = FindKind(kind_name);
  if (!kind) {
    throw Error(ErrorCode::kUnknownKind, std::string(kind_name));
  }
  return kKinds[*kind].roles;
}

std::span<const std::string_view> TerminalNames() { return kTerminals; }

std::optional<TerminalId> FindTerminal(std::string_view name) {
  for (std::size_t i = 0; i < kTerminals.size(); ++i) {
    if (kTerminals[i] == name) return static_cast<TerminalId>(i);
  }
  return std::nullopt;
}

TerminalId VssTerminal() {
  static const TerminalId id = *FindTerminal("VSS");
  return id;
}

TerminalId VddTerminal() {
  static const TerminalId id = *FindTerminal("VDD");
  return id;
}

std::string Device::Name() const {
  return std::string(GetKind(kind).prefix) + std::to_string(index);
}

std::string NodeName(const NodeKey& key) {
  switch (key.cls) {
    case NodeClass::kTerminal:
      return std::string(kTerminals.at(key.terminal));
    case NodeClass::kDevice:
      return key.Owner().Name();
    case NodeClass::kPin:
      return key.Owner().Name() + "_" +
             std::string(GetKind(key.kind).roles[key.role]);
  }
  return {};
}

std::optional<NodeKey> ParseNodeName(std::string_view name) {
  if (auto t = FindTerminal(name)) return NodeKey::MakeTerminal(*t);

  // Longest prefix first so "NPN" is not read as "N..." and "PNP" not as "PM".
  std::optional<KindId> best;
  for (std::size_t i = 0; i < kKinds.size(); ++i) {
    const auto prefix = kKinds[i].prefix;
    if (name.starts_with(prefix) &&
        (!best || prefix.size() > kKinds[*best].prefix.size())) {
      best = static_cast<KindId>(i);
    }
  }
  if (!best) return std::nullopt;
  const DeviceKind& kind = kKinds[*best];
  std::string_view rest = name.substr(kind.prefix.size());
  const auto underscore_it = std::find(rest.begin(), rest.end(), '_');
  const auto underscore =
      underscore_it == rest.end()
          ? std::string_view::npos
          : static_cast<std::size_t>(underscore_it - rest.begin());
  auto index = ParseIndex(rest.substr(0, underscore));
  if (!index || *index < 1 || *index > kind.max_count) return std::nullopt;
  const Device device{*best, static_cast<std::uint16_t>(*index)};
  if (underscore == std::string_view::npos) return NodeKey::MakeDevice(device);
  const std::string_view role = rest.substr(underscore + 1);
  for (std::size_t r = 0; r < kind.roles.size(); ++r) {
    if (kind.roles[r] == role) {
      return NodeKey::MakePin(device, static_cast<int>(r));
    }
  }
  return std::nullopt;
}

}  // namespace genie
