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

#include "genie/netlist.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "genie/error.h"

namespace genie {
namespace {

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool IsNodeName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f && c != '=';
  });
}

// A parameter field such as "W=1u" trails the nodes and is skipped.
bool IsParam(std::string_view field) {
  return field.find('=') != std::string_view::npos;
}

struct CardShape {
  KindId kind;
  std::vector<std::string_view> nodes;
};

class Parser {
 public:
  NetlistDoc Run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!ParseLine(line, line_no)) break;
      if (end == text.size()) break;
    }
    return Finish();
  }

 private:
  // Returns false once ".end" is seen.
  bool ParseLine(std::string_view line, std::size_t line_no) {
    for (char c : line) {
      const auto u = static_cast<unsigned char>(c);
      if (u >= 0x80 || (u < 0x20 && c != '\t')) {
        throw Error(ErrorCode::kSyntaxError, "non-ASCII or control byte",
                    line_no);
      }
    }
    const auto fields = SplitFields(line);
    if (fields.empty() || fields[0][0] == '*') return true;
    if (fields[0][0] == '.') {
      const std::string directive = Upper(fields[0]);
      if (directive == ".END") return false;
      if (directive == ".TITLE") {
        const auto at = line.find(fields[0]) + fields[0].size();
        std::string_view rest = line.substr(at);
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) {
          rest.remove_prefix(1);
        }
        doc_.title = std::string(rest);
      }
      return true;
    }
    const std::string card_name = Upper(fields[0]);
    if (!card_names_.insert(card_name).second) {
      throw Error(ErrorCode::kSyntaxError,
                  "duplicate card name " + std::string(fields[0]), line_no);
    }
    const CardShape shape = Classify(fields, line_no);
    AddDevice(shape, line_no);
    return true;
  }

  CardShape Classify(const std::vector<std::string_view>& fields,
                     std::size_t line_no) {
    std::vector<std::string_view> args;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!IsParam(fields[i])) args.push_back(fields[i]);
    }
    auto expect = [&](std::size_t min_args, std::size_t max_args) {
      if (args.size() < min_args || args.size() > max_args) {
        throw Error(ErrorCode::kArityMismatch,
                    "card " + std::string(fields[0]) + " has " +
                        std::to_string(args.size()) + " fields",
                    line_no);
      }
    };
    auto kind = [](std::string_view name) { return *FindKind(name); };
    const char letter =
        static_cast<char>(std::toupper(static_cast<unsigned char>(fields[0][0])));
    switch (letter) {
      case 'M': {
        expect(5, 5);
        const bool p = Upper(args[4]).find('P') != std::string::npos;
        return {kind(p ? "PM" : "NM"), {args.begin(), args.begin() + 4}};
      }
      case 'Q': {
        expect(4, 4);
        const bool pnp = Upper(args[3]).find("PNP") != std::string::npos;
        return {kind(pnp ? "PNP" : "NPN"), {args.begin(), args.begin() + 3}};
      }
      case 'R':
      case 'C':
      case 'L':
        expect(2, 3);
        return {kind(std::string(1, letter)), {args.begin(), args.begin() + 2}};
      case 'D':
        expect(2, 3);
        return {kind("DIO"), {args.begin(), args.begin() + 2}};
      case 'X': {
        if (args.empty()) {
          throw Error(ErrorCode::kArityMismatch, "subcircuit without cell",
                      line_no);
        }
        const std::string cell = Upper(args.back());
        const auto k = FindKind(cell);
        if (!k || (cell != "XOR" && cell != "INV" && cell != "TG")) {
          throw Error(ErrorCode::kUnknownDeviceCard,
                      "unsupported cell " + std::string(args.back()), line_no);
        }
        const std::size_t pins = GetKind(*k).roles.size();
        expect(pins + 1, pins + 1);
        return {*k, {args.begin(), args.end() - 1}};
      }
      default:
        throw Error(ErrorCode::kUnknownDeviceCard,
                    "unsupported card " + std::string(fields[0]), line_no);
    }
  }

  void AddDevice(const CardShape& shape, std::size_t line_no) {
    int& count = counts_[shape.kind];
    if (count >= GetKind(shape.kind).max_count) {
      throw Error(ErrorCode::kTooManyDevices,
                  std::string(GetKind(shape.kind).name), line_no);
    }
    const Device device{shape.kind, static_cast<std::uint16_t>(++count)};
    doc_.topology.devices.push_back(device);
    for (std::size_t r = 0; r < shape.nodes.size(); ++r) {
      const std::string_view node = shape.nodes[r];
      if (!IsNodeName(node)) {
        throw Error(ErrorCode::kSyntaxError,
                    "bad node name " + std::string(node), line_no);
      }
      nets_[NetKey(node)].push_back(
          NodeKey::MakePin(device, static_cast<int>(r)));
    }
  }

  static std::string NetKey(std::string_view node) {
    const std::string upper = Upper(node);
    if (upper == "VDD") return "VDD";
    if (upper == "VSS" || node == "0") return "VSS";
    return std::string(node);
  }

  NetlistDoc Finish() {
    for (auto& [name, pins] : nets_) {
      Net net{name, std::move(pins)};
      if (auto t = FindTerminal(name)) {
        net.members.push_back(NodeKey::MakeTerminal(*t));
      }
      std::sort(net.members.begin(), net.members.end());
      doc_.topology.nets.push_back(std::move(net));
    }
    doc_.topology = Normalize(doc_.topology);
    return std::move(doc_);
  }

  NetlistDoc doc_;
  std::set<std::string> card_names_;
  std::map<KindId, int> counts_;
  std::map<std::string, std::vector<NodeKey>> nets_;
};

std::string CardName(const Device& d) {
  const std::string_view kind = GetKind(d.kind).name;
  const std::string index = std::to_string(d.index);
  if (kind == "NM") return "MN" + index;
  if (kind == "PM") return "MP" + index;
  if (kind == "NPN") return "QN" + index;
  if (kind == "PNP") return "QP" + index;
  if (kind == "DIO") return "D" + index;
  if (kind == "R" || kind == "C" || kind == "L") return std::string(kind) + index;
  return "X" + std::string(kind) + index;
}

std::string_view CardTail(const Device& d) {
  const std::string_view kind = GetKind(d.kind).name;
  if (kind == "NM") return "NMOS";
  if (kind == "PM") return "PMOS";
  if (kind == "NPN") return "NPN";
  if (kind == "PNP") return "PNP";
  if (kind == "DIO") return "D";
  if (kind == "R" || kind == "C" || kind == "L") return "1";
  return kind;
}

}  // namespace

NetlistDoc ParseNetlistDoc(std::string_view text) { return Parser().Run(text); }

Topology ParseNetlist(std::string_view text) {
  return ParseNetlistDoc(text).topology;
}

std::string EmitNetlist(const Topology& t) {
  CheckTopologyInvariants(t);
  const Topology norm = Normalize(t);
  std::map<NodeKey, std::string> net_of;
  int internal = 0;
  for (const Net& net : norm.nets) {
    std::string name;
    for (const NodeKey& m : net.members) {
      if (m.IsTerminal()) {
        name = NodeName(m);
        break;
      }
    }
    if (name.empty()) name = "n" + std::to_string(++internal);
    for (const NodeKey& m : net.members) net_of[m] = name;
  }
  std::ostringstream out;
  for (const Device& d : norm.devices) {
    out << CardName(d);
    const int roles = static_cast<int>(GetKind(d.kind).roles.size());
    for (int r = 0; r < roles; ++r) {
      auto it = net_of.find(NodeKey::MakePin(d, r));
      if (it == net_of.end()) {
        // An unconnected pin gets a private net so the card stays well formed.
        it = net_of.emplace(NodeKey::MakePin(d, r),
                            "n" + std::to_string(++internal)).first;
      }
      out << ' ' << it->second;
    }
    out << ' ' << CardTail(d) << '\n';
  }
  out << ".END\n";
  return out.str();
}

}  // namespace genie
