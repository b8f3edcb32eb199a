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

#include "genie/canonical.h"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <tuple>

#include "genie/digest.h"
#include "genie/error.h"

namespace genie {
namespace {

using Colors = std::vector<int>;

int CountDistinct(const Colors& colors) {
  Colors sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) -
                          sorted.begin());
}

// Ranks `keys` densely in sorted order.
template <typename Key>
Colors Rank(const std::vector<Key>& keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  Colors colors(keys.size());
  int rank = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || keys[order[i - 1]] < keys[order[i]]) ++rank;
    colors[order[i]] = rank;
  }
  return colors;
}

Colors InitialColors(const PinGraph& g) {
  std::vector<std::tuple<int, int, int, int>> types;
  types.reserve(g.num_nodes());
  for (const NodeKey& k : g.nodes()) {
    types.emplace_back(static_cast<int>(k.cls), k.kind, k.role, k.terminal);
  }
  return Rank(types);
}

// Colour refinement to the coarsest equitable partition finer than `colors`.
void Refine(const PinGraph& g, Colors& colors) {
  int distinct = CountDistinct(colors);
  std::vector<std::vector<int>> signatures(g.num_nodes());
  while (true) {
    for (int i = 0; i < g.num_nodes(); ++i) {
      auto& sig = signatures[i];
      sig.clear();
      sig.push_back(colors[i]);
      for (int j : g.Neighbors(i)) sig.push_back(colors[j]);
      std::sort(sig.begin() + 1, sig.end());
    }
    colors = Rank(signatures);
    const int next = CountDistinct(colors);
    if (next == distinct) return;
    distinct = next;
  }
}

NodeKey Swapped(const NodeKey& k, const Device& a, const Device& b) {
  if (k.IsTerminal()) return k;
  NodeKey out = k;
  if (k.Owner() == a) {
    out.index = b.index;
  } else if (k.Owner() == b) {
    out.index = a.index;
  }
  return out;
}

// True when exchanging devices `a` and `b` maps the graph onto itself.
bool AreTwins(const PinGraph& g, const Device& a, const Device& b) {
  const int roles = static_cast<int>(GetKind(a.kind).roles.size());
  std::vector<NodeKey> lhs;
  std::vector<NodeKey> rhs;
  for (int r = 0; r < roles; ++r) {
    const auto pa = g.IndexOf(NodeKey::MakePin(a, r));
    const auto pb = g.IndexOf(NodeKey::MakePin(b, r));
    if (!pa || !pb) return false;
    lhs.clear();
    rhs.clear();
    for (int n : g.Neighbors(*pa)) lhs.push_back(Swapped(g.node(n), a, b));
    for (int n : g.Neighbors(*pb)) rhs.push_back(g.node(n));
    std::sort(lhs.begin(), lhs.end());
    if (lhs != rhs) return false;
  }
  return true;
}

struct Leaf {
  std::vector<std::array<std::uint64_t, 2>> certificate;
  std::vector<int> order;
  DeviceRenumbering renumbering;
};

Leaf MakeLeaf(const PinGraph& g, const Colors& colors, int vss) {
  const int n = g.num_nodes();
  auto key = [&](int i) {
    const NodeKey& k = g.node(i);
    return std::make_tuple(static_cast<int>(k.cls), k.kind, -g.Degree(i),
                           k.role, colors[i]);
  };
  Leaf leaf;
  std::vector<char> seen(n, 0);
  std::deque<int> queue = {vss};
  seen[vss] = 1;
  std::vector<int> frontier;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    leaf.order.push_back(u);
    frontier.clear();
    for (int v : g.Neighbors(u)) {
      if (!seen[v]) frontier.push_back(v);
    }
    std::sort(frontier.begin(), frontier.end(),
              [&](int a, int b) { return key(a) < key(b); });
    for (int v : frontier) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }

  std::vector<std::uint16_t> next_index(DeviceKinds().size(), 0);
  for (int i : leaf.order) {
    const NodeKey& k = g.node(i);
    if (k.IsTerminal()) continue;
    if (leaf.renumbering.emplace(k.Owner(), Device{}).second) {
      leaf.renumbering[k.Owner()] = {k.kind, ++next_index[k.kind]};
    }
  }

  auto renamed = [&](int i) {
    NodeKey k = g.node(i);
    if (!k.IsTerminal()) k.index = leaf.renumbering.at(k.Owner()).index;
    return k.Packed();
  };
  leaf.certificate.reserve(g.num_edges());
  for (const PinGraph::Edge& e : g.edges()) {
    std::uint64_t a = renamed(e.u);
    std::uint64_t b = renamed(e.v);
    if (a > b) std::swap(a, b);
    leaf.certificate.push_back(
        {a, b | (static_cast<std::uint64_t>(e.cls) << 63)});
  }
  std::sort(leaf.certificate.begin(), leaf.certificate.end());
  return leaf;
}

class Search {
 public:
  Search(const PinGraph& g, int vss) : g_(g), vss_(vss) {}

  Leaf Run() {
    Colors colors = InitialColors(g_);
    Refine(g_, colors);
    Visit(colors);
    return std::move(*best_);
  }

 private:
  void Visit(const Colors& colors) {
    if (leaves_ >= kMaxLeaves) return;
    const std::vector<int> cell = TargetCell(colors);
    if (cell.empty()) {
      ++leaves_;
      Leaf leaf = MakeLeaf(g_, colors, vss_);
      if (!best_ || leaf.certificate < best_->certificate) {
        best_ = std::move(leaf);
      }
      return;
    }
    std::vector<int> tried;
    for (int v : cell) {
      const bool twin = std::any_of(tried.begin(), tried.end(), [&](int t) {
        return g_.node(t).IsDevice() &&
               AreTwins(g_, g_.node(t).Owner(), g_.node(v).Owner());
      });
      if (twin) continue;
      tried.push_back(v);
      Colors next(colors.size());
      for (std::size_t i = 0; i < colors.size(); ++i) next[i] = 2 * colors[i];
      next[v] -= 1;
      Refine(g_, next);
      Visit(next);
    }
  }

  // Smallest-coloured non-singleton cell, preferring device nodes.
  std::vector<int> TargetCell(const Colors& colors) const {
    std::vector<int> count(g_.num_nodes() + 1, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int pass = 0; pass < 2 && target < 0; ++pass) {
      for (int i = 0; i < g_.num_nodes(); ++i) {
        if (count[colors[i]] < 2) continue;
        if (pass == 0 && !g_.node(i).IsDevice()) continue;
        if (target < 0 || colors[i] < target) target = colors[i];
      }
    }
    std::vector<int> cell;
    if (target < 0) return cell;
    for (int i = 0; i < g_.num_nodes(); ++i) {
      if (colors[i] == target) cell.push_back(i);
    }
    return cell;
  }

  const PinGraph& g_;
  int vss_;
  int leaves_ = 0;
  std::optional<Leaf> best_;
};

}  // namespace

PinGraph RelabelDevices(const PinGraph& g,
                        const DeviceRenumbering& renumbering) {
  auto rename = [&](NodeKey k) {
    if (k.IsTerminal()) return k;
    auto it = renumbering.find(k.Owner());
    if (it != renumbering.end()) k.index = it->second.index;
    return k;
  };
  std::vector<NodeKey> nodes;
  nodes.reserve(g.num_nodes());
  for (const NodeKey& k : g.nodes()) nodes.push_back(rename(k));
  std::vector<EdgeSpec> edges;
  edges.reserve(g.num_edges());
  for (const PinGraph::Edge& e : g.edges()) {
    edges.push_back({rename(g.node(e.u)), rename(g.node(e.v)), e.cls});
  }
  return PinGraph::FromEdges(std::move(nodes), edges);
}

CanonicalForm Canonicalize(const PinGraph& g) {
  const auto vss = g.VssIndex();
  if (!vss) throw Error(ErrorCode::kMissingVss, "graph has no VSS node");
  if (!g.IsConnected()) {
    throw Error(ErrorCode::kDisconnected, "graph is not connected");
  }
  Leaf leaf = Search(g, *vss).Run();
  CanonicalForm form;
  form.graph = RelabelDevices(g, leaf.renumbering);
  for (int i : leaf.order) {
    NodeKey k = g.node(i);
    if (!k.IsTerminal()) k.index = leaf.renumbering.at(k.Owner()).index;
    form.labeling.node_order.push_back(k);
  }
  form.labeling.device_renumbering = std::move(leaf.renumbering);
  return form;
}

std::string CanonicalHash(const PinGraph& g) {
  const PinGraph canon = Canonicalize(g).graph;
  std::string text;
  for (const PinGraph::Edge& e : canon.edges()) {
    text += NodeName(canon.node(e.u));
    text += ' ';
    text += NodeName(canon.node(e.v));
    text += e.cls == EdgeClass::kStructural ? " S\n" : " C\n";
  }
  return Sha256Hex(text);
}

std::string TopologyHash(const Topology& t) {
  return CanonicalHash(BuildGraph(Normalize(t), NetExpansion::kClique));
}

bool IsomorphicOracle(const PinGraph& a, const PinGraph& b) {
  if (a.num_nodes() > kOracleMaxNodes || b.num_nodes() > kOracleMaxNodes) {
    throw Error(ErrorCode::kTooLarge, "oracle is limited to 16 nodes");
  }
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) {
    return false;
  }
  const int n = a.num_nodes();
  auto same_type = [](const NodeKey& x, const NodeKey& y) {
    return x.cls == y.cls && x.kind == y.kind && x.role == y.role &&
           x.terminal == y.terminal;
  };
  auto edge_class = [](const PinGraph& g, int u, int v) -> int {
    if (!g.HasEdge(u, v)) return -1;
    if (u > v) std::swap(u, v);
    for (const PinGraph::Edge& e : g.edges()) {
      if (e.u == u && e.v == v) return static_cast<int>(e.cls);
    }
    return -1;
  };
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto extend = [&](auto&& self, int i) -> bool {
    if (i == n) return true;
    for (int j = 0; j < n; ++j) {
      if (used[j] || !same_type(a.node(i), b.node(j))) continue;
      if (a.Degree(i) != b.Degree(j)) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        ok = edge_class(a, i, k) == edge_class(b, j, map[k]);
      }
      if (!ok) continue;
      map[i] = j;
      used[j] = 1;
      if (self(self, i + 1)) return true;
      used[j] = 0;
      map[i] = -1;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace genie
