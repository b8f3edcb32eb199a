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

#include "genie/euler.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "genie/error.h"
#include "genie/rng.h"

namespace genie {
namespace {

// Uniform spanning tree by loop-erased random walks (Wilson). parent[root]
// stays -1.
std::vector<int> RandomSpanningTree(const PinGraph& g, int root, Rng& rng) {
  const int n = g.num_nodes();
  std::vector<int> parent(n, -1);
  std::vector<char> in_tree(n, 0);
  in_tree[root] = 1;
  for (int start = 0; start < n; ++start) {
    int u = start;
    while (!in_tree[u]) {
      const auto nb = g.Neighbors(u);
      parent[u] = nb[rng.Below(nb.size())];
      u = parent[u];
    }
    for (u = start; !in_tree[u]; u = parent[u]) in_tree[u] = 1;
  }
  return parent;
}

}  // namespace

TokenSequence Encode(const PinGraph& g, std::uint64_t order_seed) {
  const auto vss = g.VssIndex();
  if (!vss) throw Error(ErrorCode::kMissingVss, "graph has no VSS node");
  if (g.num_edges() == 0 || !g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected, "graph has no Eulerian circuit");
  }
  Rng rng(order_seed);
  const int n = g.num_nodes();
  const std::vector<int> parent = RandomSpanningTree(g, *vss, rng);

  std::vector<std::vector<int>> exits(n);
  for (int u = 0; u < n; ++u) {
    const auto nb = g.Neighbors(u);
    exits[u].assign(nb.begin(), nb.end());
    rng.Shuffle(std::span<int>(exits[u]));
    if (parent[u] >= 0) {
      auto it = std::find(exits[u].begin(), exits[u].end(), parent[u]);
      std::rotate(it, it + 1, exits[u].end());
    }
  }

  // Hierholzer over the fixed exit orders.
  std::vector<std::size_t> next(n, 0);
  std::vector<int> stack = {*vss};
  std::vector<int> circuit;
  circuit.reserve(2 * g.num_edges() + 1);
  while (!stack.empty()) {
    const int u = stack.back();
    if (next[u] < exits[u].size()) {
      stack.push_back(exits[u][next[u]++]);
    } else {
      circuit.push_back(u);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());

  TokenSequence s;
  s.source = SequenceSource::kEncoded;
  s.tokens.reserve(circuit.size());
  for (int u : circuit) s.tokens.push_back(NodeName(g.node(u)));
  return s;
}

std::vector<NodeKey> ParseTokens(const TokenSequence& s) {
  std::vector<NodeKey> walk;
  walk.reserve(s.tokens.size());
  for (const std::string& token : s.tokens) {
    if (token == kTruncateToken) break;
    auto key = ParseNodeName(token);
    if (!key) throw Error(ErrorCode::kUnknownToken, token);
    walk.push_back(*key);
  }
  return walk;
}

void CheckLegalEdges(std::span<const NodeKey> walk) {
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (!ExpectedEdgeClass(walk[i - 1], walk[i])) {
      throw Error(ErrorCode::kIllegalEdge,
                  NodeName(walk[i - 1]) + "," + NodeName(walk[i]));
    }
  }
}

PinGraph Decode(const TokenSequence& s) {
  const std::vector<NodeKey> walk = ParseTokens(s);
  if (walk.size() < 2) {
    throw Error(ErrorCode::kEmptySequence, "need at least two tokens");
  }
  CheckLegalEdges(walk);
  std::vector<EdgeSpec> edges;
  edges.reserve(walk.size());
  std::set<Device> devices;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (!walk[i].IsTerminal()) devices.insert(walk[i].Owner());
    if (i > 0) {
      edges.push_back(
          {walk[i - 1], walk[i], *ExpectedEdgeClass(walk[i - 1], walk[i])});
    }
  }
  std::vector<NodeKey> nodes(walk.begin(), walk.end());
  for (const Device& d : devices) {
    const NodeKey dev = NodeKey::MakeDevice(d);
    const int roles = static_cast<int>(GetKind(d.kind).roles.size());
    for (int r = 0; r < roles; ++r) {
      edges.push_back({dev, NodeKey::MakePin(d, r), EdgeClass::kStructural});
    }
  }
  return PinGraph::FromEdges(std::move(nodes), edges);
}

std::string_view EulerViolationName(EulerViolation v) {
  switch (v) {
    case EulerViolation::kNone: return "none";
    case EulerViolation::kEmpty: return "empty";
    case EulerViolation::kUnknownToken: return "unknown_token";
    case EulerViolation::kNotAnchored: return "not_anchored";
    case EulerViolation::kNotClosed: return "not_closed";
    case EulerViolation::kNotAnEdge: return "not_an_edge";
    case EulerViolation::kArcReused: return "arc_reused";
    case EulerViolation::kArcsMissing: return "arcs_missing";
  }
  return "unknown";
}

EulerCheck VerifyEuler(const TokenSequence& s, const PinGraph& g) {
  auto fail = [](EulerViolation v, std::string detail = {}) {
    return EulerCheck{false, v, std::move(detail)};
  };
  std::vector<int> walk;
  for (const std::string& token : s.tokens) {
    if (token == kTruncateToken) break;
    const auto key = ParseNodeName(token);
    const auto index = key ? g.IndexOf(*key) : std::nullopt;
    if (!index) return fail(EulerViolation::kUnknownToken, token);
    walk.push_back(*index);
  }
  if (walk.size() < 2) return fail(EulerViolation::kEmpty);
  if (!IsVss(g.node(walk.front()))) {
    return fail(EulerViolation::kNotAnchored, NodeName(g.node(walk.front())));
  }
  if (walk.back() != walk.front()) {
    return fail(EulerViolation::kNotClosed, NodeName(g.node(walk.back())));
  }
  const auto n = static_cast<std::uint64_t>(g.num_nodes());
  std::unordered_set<std::uint64_t> used;
  used.reserve(walk.size());
  for (std::size_t i = 1; i < walk.size(); ++i) {
    const int u = walk[i - 1];
    const int v = walk[i];
    if (!g.HasEdge(u, v)) {
      return fail(EulerViolation::kNotAnEdge,
                  NodeName(g.node(u)) + "," + NodeName(g.node(v)));
    }
    if (!used.insert(static_cast<std::uint64_t>(u) * n + v).second) {
      return fail(EulerViolation::kArcReused,
                  NodeName(g.node(u)) + "," + NodeName(g.node(v)));
    }
  }
  if (used.size() != 2 * static_cast<std::size_t>(g.num_edges())) {
    return fail(EulerViolation::kArcsMissing,
                std::to_string(2 * g.num_edges() - used.size()) + " unused");
  }
  return {true, EulerViolation::kNone, {}};
}

std::string FormatSequenceLine(const TokenSequence& s) {
  std::string line;
  for (const std::string& token : s.tokens) {
    line += token;
    line += ' ';
  }
  line += kTruncateToken;
  return line;
}

TokenSequence ParseSequenceLine(std::string_view line) {
  TokenSequence s;
  s.source = SequenceSource::kGenerated;
  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    if (token == kTruncateToken) break;
    s.tokens.push_back(token);
  }
  return s;
}

void WriteSequences(std::ostream& out, std::span<const TokenSequence> seqs) {
  for (const TokenSequence& s : seqs) out << FormatSequenceLine(s) << '\n';
}

std::vector<TokenSequence> ReadSequences(std::istream& in) {
  std::vector<TokenSequence> seqs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    seqs.push_back(ParseSequenceLine(line));
  }
  return seqs;
}

void WriteSequenceFile(const std::string& path,
                       std::span<const TokenSequence> seqs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  WriteSequences(out, seqs);
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

std::vector<TokenSequence> ReadSequenceFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return ReadSequences(in);
}

}  // namespace genie
