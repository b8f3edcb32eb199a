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

#include "genie/ngram.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "genie/error.h"
#include "genie/rng.h"

namespace genie {
namespace {

constexpr char kMagic[4] = {'G', 'N', 'G', 'M'};
constexpr std::uint32_t kFormatVersion = 1;

class Writer {
 public:
  void U16(std::uint16_t v) { Bytes(v, 2); }
  void U32(std::uint32_t v) { Bytes(v, 4); }
  void U64(std::uint64_t v) { Bytes(v, 8); }
  void F64(double v) { U64(std::bit_cast<std::uint64_t>(v)); }
  void Raw(std::string_view s) { out_.append(s); }
  std::string Take() { return std::move(out_); }

 private:
  void Bytes(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<char>(v >> (8 * i)));
  }
  std::string out_;
};

class Reader {
 public:
  explicit Reader(std::string_view in) : in_(in) {}
  std::uint16_t U16() { return static_cast<std::uint16_t>(Bytes(2)); }
  std::uint32_t U32() { return static_cast<std::uint32_t>(Bytes(4)); }
  std::uint64_t U64() { return Bytes(8); }
  double F64() { return std::bit_cast<double>(U64()); }
  std::string_view Raw(std::size_t n) {
    Need(n);
    auto s = in_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool AtEnd() const { return pos_ == in_.size(); }

 private:
  void Need(std::size_t n) {
    if (in_.size() - pos_ < n) {
      throw Error(ErrorCode::kCorruptStream, "truncated model", std::nullopt,
                  pos_);
    }
  }
  std::uint64_t Bytes(int n) {
    Need(n);
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + i]))
           << (8 * i);
    }
    pos_ += n;
    return v;
  }
  std::string_view in_;
  std::size_t pos_ = 0;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

}  // namespace

NgramModel NgramModel::Fit(std::span<const IdSequence> corpus,
                           const Vocab& vocab, int order, double alpha) {
  if (order < 2) throw Error(ErrorCode::kBadOrder, std::to_string(order));
  if (corpus.empty()) throw Error(ErrorCode::kEmptyCorpus, "no sequences");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "backoff alpha must be in (0, 1]");
  }
  NgramModel model(vocab, order, alpha);
  std::vector<std::map<IdSequence, std::map<TokenId, std::uint32_t>>> counts(
      order);
  for (const IdSequence& seq : corpus) {
    if (seq.empty() || seq.back() != vocab.truncate_id()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "corpus sequence is not TRUNCATE-terminated");
    }
    for (TokenId id : seq) {
      if (id >= vocab.size()) {
        throw Error(ErrorCode::kIdOutOfRange, std::to_string(id));
      }
    }
    for (std::size_t i = 1; i < seq.size(); ++i) {
      const std::size_t longest = std::min<std::size_t>(order - 1, i);
      for (std::size_t k = 0; k <= longest; ++k) {
        IdSequence context(seq.begin() + static_cast<long>(i - k),
                           seq.begin() + static_cast<long>(i));
        ++counts[k][std::move(context)][seq[i]];
      }
    }
  }
  for (int k = 0; k < order; ++k) {
    for (auto& [context, nexts] : counts[k]) {
      Table& table = model.tables_[k][context];
      for (const auto& [id, c] : nexts) {
        table.next.push_back({id, c});
        table.total += c;
      }
    }
  }
  return model;
}

const NgramModel::Table* NgramModel::Find(
    std::span<const TokenId> context) const {
  if (context.size() >= tables_.size()) return nullptr;
  const auto& level = tables_[context.size()];
  auto it = level.find(context);
  if (it == level.end()) return nullptr;
  return &it->second;
}

double NgramModel::Score(std::span<const TokenId> context,
                         TokenId next) const {
  const std::size_t longest =
      std::min<std::size_t>(order_ - 1, context.size());
  double factor = 1.0;
  for (std::size_t k = longest + 1; k-- > 0; factor *= alpha_) {
    const Table* table = Find(context.last(k));
    if (!table) continue;
    auto it = std::lower_bound(
        table->next.begin(), table->next.end(), next,
        [](const NextCount& a, TokenId id) { return a.id < id; });
    if (it != table->next.end() && it->id == next) {
      return factor * static_cast<double>(it->count) /
             static_cast<double>(table->total);
    }
  }
  return 0.0;
}

void NgramModel::Scores(std::span<const TokenId> context,
                        std::vector<std::pair<TokenId, double>>& out) const {
  out.clear();
  std::vector<std::pair<TokenId, double>> merged;
  const std::size_t longest =
      std::min<std::size_t>(order_ - 1, context.size());
  double factor = 1.0;
  for (std::size_t k = longest + 1; k-- > 0; factor *= alpha_) {
    const Table* table = Find(context.last(k));
    if (!table) continue;
    const double scale = factor / static_cast<double>(table->total);
    merged.clear();
    merged.reserve(out.size() + table->next.size());
    auto a = out.begin();
    auto b = table->next.begin();
    while (a != out.end() || b != table->next.end()) {
      if (b == table->next.end() || (a != out.end() && a->first < b->id)) {
        merged.push_back(*a++);
      } else if (a == out.end() || b->id < a->first) {
        merged.emplace_back(b->id, scale * b->count);
        ++b;
      } else {
        merged.push_back(*a++);  // already scored at a longer context
        ++b;
      }
    }
    out.swap(merged);
  }
}

std::string NgramModel::Serialize() const {
  Writer w;
  w.Raw(std::string_view(kMagic, 4));
  w.U32(kFormatVersion);
  w.U32(static_cast<std::uint32_t>(order_));
  w.F64(alpha_);
  w.U32(static_cast<std::uint32_t>(vocab_.size()));
  w.Raw(vocab_.digest());
  for (int k = 0; k < order_; ++k) {
    w.U64(tables_[k].size());
    for (const auto& [context, table] : tables_[k]) {
      for (TokenId id : context) w.U16(id);
      w.U64(table.total);
      w.U32(static_cast<std::uint32_t>(table.next.size()));
      for (const NextCount& n : table.next) {
        w.U16(n.id);
        w.U32(n.count);
      }
    }
  }
  return w.Take();
}

NgramModel NgramModel::Deserialize(std::string_view bytes, const Vocab& vocab) {
  Reader r(bytes);
  if (r.Raw(4) != std::string_view(kMagic, 4)) {
    throw Error(ErrorCode::kCorruptStream, "bad magic", std::nullopt, 0);
  }
  if (r.U32() != kFormatVersion) {
    throw Error(ErrorCode::kCorruptStream, "unsupported model version");
  }
  const auto order = static_cast<int>(r.U32());
  const double alpha = r.F64();
  const std::uint32_t vocab_size = r.U32();
  const std::string digest(r.Raw(64));
  if (order < 2 || order > 64) {
    throw Error(ErrorCode::kCorruptStream, "bad order");
  }
  if (vocab_size != vocab.size() || digest != vocab.digest()) {
    throw Error(ErrorCode::kInvalidArgument,
                "model was fitted with a different vocab");
  }
  NgramModel model(vocab, order, alpha);
  for (int k = 0; k < order; ++k) {
    const std::uint64_t contexts = r.U64();
    for (std::uint64_t c = 0; c < contexts; ++c) {
      IdSequence context(k);
      for (int i = 0; i < k; ++i) context[i] = r.U16();
      Table table;
      table.total = r.U64();
      const std::uint32_t n = r.U32();
      for (std::uint32_t i = 0; i < n; ++i) {
        const TokenId id = r.U16();
        const std::uint32_t count = r.U32();
        if (id >= vocab.size()) {
          throw Error(ErrorCode::kCorruptStream, "id outside vocab");
        }
        table.next.push_back({id, count});
      }
      model.tables_[k].emplace(std::move(context), std::move(table));
    }
  }
  if (!r.AtEnd()) throw Error(ErrorCode::kCorruptStream, "trailing bytes");
  return model;
}

void NgramModel::Save(const std::string& path) const {
  WriteFile(path, Serialize());
}

NgramModel NgramModel::Load(const std::string& path, const Vocab& vocab) {
  return Deserialize(ReadFile(path), vocab);
}

WalkState::WalkState(const Vocab& vocab)
    : vocab_(&vocab),
      introduced_(DeviceKinds().size()),
      per_kind_(DeviceKinds().size(), 0) {
  for (std::size_t k = 0; k < introduced_.size(); ++k) {
    introduced_[k].assign(GetKind(static_cast<KindId>(k)).max_count + 1, 0);
  }
}

void WalkState::Push(TokenId id) {
  ++length_;
  current_.reset();
  if (id >= vocab_->size()) return;
  const auto& node = vocab_->nodes()[id];
  current_ = node;
  if (!node || node->IsTerminal()) return;
  char& seen = introduced_[node->kind][node->index];
  if (!seen) {
    seen = 1;
    ++per_kind_[node->kind];
  }
}

bool WalkState::Introduced(const Device& d) const {
  return introduced_[d.kind][d.index] != 0;
}

bool Allowed(const Vocab& vocab, const SamplerConfig& cfg,
             const WalkState& state, TokenId candidate) {
  const auto current = state.current();
  if (!current) return false;
  if (candidate == vocab.truncate_id()) {
    return IsVss(*current) && state.length() >= 3;
  }
  if (candidate >= vocab.size()) return false;
  const auto& node = vocab.nodes()[candidate];
  if (!node || !ExpectedEdgeClass(*current, *node)) return false;
  if (node->IsTerminal()) return true;
  const Device d = node->Owner();
  if (state.Introduced(d)) return true;
  int budget = vocab.MaxCount(d.kind);
  auto it = cfg.device_budget.find(std::string(GetKind(d.kind).name));
  if (it != cfg.device_budget.end()) budget = std::min(budget, it->second);
  return state.DevicesOfKind(d.kind) < budget;
}

namespace {

struct SparseDistribution {
  std::vector<std::pair<TokenId, double>> support;  // ascending id, sums to 1
  bool fallback = false;
  bool unmasked = false;  // mask on, but no legal token had any score
};

void Normalize(std::vector<std::pair<TokenId, double>>& items) {
  double total = 0.0;
  for (const auto& [id, p] : items) total += p;
  for (auto& [id, p] : items) p /= total;
}

SparseDistribution Next(const NgramModel& m, std::span<const TokenId> context,
                        const SamplerConfig& cfg, const WalkState& state) {
  if (context.empty()) throw Error(ErrorCode::kEmptyContext, "");
  if (!(cfg.temperature > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "temperature must be > 0");
  }
  const Vocab& vocab = m.vocab();
  SparseDistribution dist;
  std::vector<std::pair<TokenId, double>> weights;
  m.Scores(context, weights);

  if (cfg.temperature != 1.0 && !weights.empty()) {
    double max_log = -INFINITY;
    for (auto& [id, w] : weights) {
      w = std::log(w) / cfg.temperature;
      max_log = std::max(max_log, w);
    }
    for (auto& [id, w] : weights) w = std::exp(w - max_log);
  }
  const std::vector<std::pair<TokenId, double>> untruncated =
      cfg.top_k && cfg.legality_mask ? weights
                                     : std::vector<std::pair<TokenId, double>>{};
  if (cfg.top_k && *cfg.top_k > 0 &&
      weights.size() > static_cast<std::size_t>(*cfg.top_k)) {
    std::vector<std::pair<TokenId, double>> ranked = weights;
    std::nth_element(ranked.begin(), ranked.begin() + *cfg.top_k - 1,
                     ranked.end(), [](const auto& a, const auto& b) {
                       return a.second > b.second ||
                              (a.second == b.second && a.first < b.first);
                     });
    const auto cutoff = ranked[*cfg.top_k - 1];
    std::erase_if(weights, [&](const auto& e) {
      return e.second < cutoff.second ||
             (e.second == cutoff.second && e.first > cutoff.first);
    });
  }

  const bool at_vss = state.current() && IsVss(*state.current());
  if (cfg.legality_mask) {
    auto legal = [&](const std::vector<std::pair<TokenId, double>>& from) {
      std::vector<std::pair<TokenId, double>> out;
      for (const auto& e : from) {
        if (Allowed(vocab, cfg, state, e.first)) out.push_back(e);
      }
      return out;
    };
    std::vector<std::pair<TokenId, double>> masked = legal(weights);
    if (masked.empty() && !untruncated.empty()) {
      // Top-k left no legal token; widen to the full backoff support.
      masked = legal(untruncated);
      dist.fallback = !masked.empty();
    }
    if (masked.empty()) {
      if (at_vss || weights.empty()) {
        dist.support = {{vocab.truncate_id(), 1.0}};
        dist.fallback = !at_vss;
        return dist;
      }
      dist.fallback = true;
      dist.unmasked = true;
    } else {
      weights.swap(masked);
    }
  }
  if (weights.empty()) {
    dist.support = {{vocab.truncate_id(), 1.0}};
    dist.fallback = true;
    return dist;
  }
  Normalize(weights);
  dist.support = std::move(weights);
  return dist;
}

}  // namespace

Distribution NextDistribution(const NgramModel& m,
                              std::span<const TokenId> context,
                              const SamplerConfig& cfg,
                              const WalkState& state) {
  SparseDistribution sparse = Next(m, context, cfg, state);
  Distribution dist;
  dist.probs.assign(m.vocab().size(), 0.0);
  for (const auto& [id, p] : sparse.support) dist.probs[id] = p;
  dist.fallback = sparse.fallback;
  return dist;
}

SampleResult SampleWithStats(const NgramModel& m, const SamplerConfig& cfg) {
  const Vocab& vocab = m.vocab();
  if (cfg.max_len < 2 || cfg.max_len > vocab.max_seq_len()) {
    throw Error(ErrorCode::kInvalidArgument,
                "max_len must be in [2, " + std::to_string(vocab.max_seq_len()) +
                    "]");
  }
  Rng rng(cfg.seed);
  SampleResult result;
  result.sequence.source = SequenceSource::kGenerated;
  IdSequence context = {vocab.Id("VSS")};
  WalkState state(vocab);
  state.Push(context.front());
  const auto cap = static_cast<std::size_t>(cfg.max_len - 1);
  while (true) {
    if (context.size() >= cap) {
      result.hit_cap = true;
      break;
    }
    const SparseDistribution dist = Next(m, context, cfg, state);
    if (dist.fallback) ++result.fallback_steps;
    // No legal continuation: end the walk rather than emit an illegal edge.
    if (dist.unmasked) break;
    const double u = rng.Uniform();
    double cumulative = 0.0;
    TokenId pick = dist.support.back().first;
    for (const auto& [id, p] : dist.support) {
      cumulative += p;
      if (u < cumulative) {
        pick = id;
        break;
      }
    }
    if (pick == vocab.truncate_id()) break;
    context.push_back(pick);
    state.Push(pick);
  }
  result.sequence.tokens.reserve(context.size());
  for (TokenId id : context) result.sequence.tokens.push_back(vocab.Token(id));
  return result;
}

TokenSequence Sample(const NgramModel& m, const SamplerConfig& cfg) {
  return SampleWithStats(m, cfg).sequence;
}

void ExportCorpus(std::span<const TokenSequence> seqs, const std::string& path,
                  const Vocab& vocab) {
  WriteFile(path, EncodeIdStream(seqs, vocab));
}

std::vector<IdSequence> ReadIdCorpus(const std::string& path,
                                     const Vocab& vocab) {
  return DecodeIdStream(ReadFile(path), vocab);
}

std::vector<TokenSequence> ImportSamples(const std::string& path,
                                         const Vocab& vocab) {
  std::vector<TokenSequence> out;
  for (const IdSequence& ids : ReadIdCorpus(path, vocab)) {
    out.push_back(DecodeIds(ids, vocab));
  }
  return out;
}

}  // namespace genie
