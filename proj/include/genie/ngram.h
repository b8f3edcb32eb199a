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

#ifndef GENIE_NGRAM_H_
#define GENIE_NGRAM_H_

// Native autoregressive baseline: a stupid-backoff n-gram model over vocab
// ids, a sampler with an optional legality mask, and the id-stream bridge to
// external models.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genie/euler.h"
#include "genie/vocab.h"

namespace genie {

using IdSequence = std::vector<TokenId>;

// Lexicographic order that also accepts spans, for allocation-free lookups.
struct IdLess {
  using is_transparent = void;
  bool operator()(std::span<const TokenId> a, std::span<const TokenId> b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

inline constexpr int kDefaultOrder = 5;
inline constexpr double kDefaultBackoffAlpha = 0.4;

class NgramModel {
 public:
  struct NextCount {
    TokenId id;
    std::uint32_t count;
  };
  struct Table {
    std::uint64_t total = 0;
    std::vector<NextCount> next;  // ascending id
  };

  // Counts every (context, next) pair inside each sequence; contexts never
  // cross sequence boundaries. Each sequence must end with TRUNCATE. Throws
  // EmptyCorpus or BadOrder.
  static NgramModel Fit(std::span<const IdSequence> corpus, const Vocab& vocab,
                        int order = kDefaultOrder,
                        double alpha = kDefaultBackoffAlpha);

  int order() const { return order_; }
  double alpha() const { return alpha_; }
  const Vocab& vocab() const { return vocab_; }

  // Table for exactly this context (length < order), or nullptr.
  const Table* Find(std::span<const TokenId> context) const;

  // Stupid-backoff score of `next` after the last order-1 ids of `context`:
  // the relative frequency at the longest context where the pair was seen,
  // times alpha per level backed off.
  double Score(std::span<const TokenId> context, TokenId next) const;

  // All non-zero scores, ascending id.
  void Scores(std::span<const TokenId> context,
              std::vector<std::pair<TokenId, double>>& out) const;

  // Versioned little-endian binary: magic, version, order, alpha, vocab size
  // and digest, then the count tables in sorted order.
  std::string Serialize() const;
  // Throws CorruptStream, or InvalidArgument when the vocab digest differs.
  static NgramModel Deserialize(std::string_view bytes, const Vocab& vocab);
  void Save(const std::string& path) const;
  static NgramModel Load(const std::string& path, const Vocab& vocab);

 private:
  NgramModel(const Vocab& vocab, int order, double alpha)
      : vocab_(vocab), order_(order), alpha_(alpha), tables_(order) {}

  Vocab vocab_;
  int order_;
  double alpha_;
  std::vector<std::map<IdSequence, Table, IdLess>> tables_;  // by context length
};

struct SamplerConfig {
  double temperature = 1.0;
  std::optional<int> top_k;
  bool legality_mask = true;
  int max_len = kDefaultMaxSeqLen;
  std::uint64_t seed = 0;
  std::map<std::string, int> device_budget;  // optional per-kind caps
};

// Position of a partial walk: the current node and which devices it has
// introduced so far.
class WalkState {
 public:
  explicit WalkState(const Vocab& vocab);

  void Push(TokenId id);
  std::optional<NodeKey> current() const { return current_; }
  std::size_t length() const { return length_; }
  bool Introduced(const Device& d) const;
  int DevicesOfKind(KindId kind) const { return per_kind_[kind]; }

 private:
  const Vocab* vocab_;
  std::optional<NodeKey> current_;
  std::size_t length_ = 0;
  std::vector<std::vector<char>> introduced_;  // [kind][index]
  std::vector<int> per_kind_;
};

// True when `candidate` may follow the current state under the mask: the edge
// is legal, a new device stays within its kind budget, and TRUNCATE only
// closes a walk that is back at VSS.
bool Allowed(const Vocab& vocab, const SamplerConfig& cfg,
             const WalkState& state, TokenId candidate);

struct Distribution {
  std::vector<double> probs;  // dense, vocab size
  bool fallback = false;      // mask left no support
};

// Backoff scores, then temperature, then top-k, then the optional mask, then
// renormalization. If top-k leaves no legal token, the mask is applied to the
// scores before top-k instead. If nothing legal has a score at all the result
// is {TRUNCATE} at VSS, otherwise the unmasked distribution. Both cases set
// `fallback`. Throws EmptyContext.
Distribution NextDistribution(const NgramModel& m,
                              std::span<const TokenId> context,
                              const SamplerConfig& cfg, const WalkState& state);

struct SampleResult {
  TokenSequence sequence;
  bool hit_cap = false;
  int fallback_steps = 0;
};

// Draws from VSS until TRUNCATE or until the content reaches max_len - 1
// tokens. With the mask on, a step with no legal continuation ends the walk,
// so masked samples never contain an illegal edge. Deterministic for a fixed
// seed.
SampleResult SampleWithStats(const NgramModel& m, const SamplerConfig& cfg);
TokenSequence Sample(const NgramModel& m, const SamplerConfig& cfg);

// Id-stream files (see EncodeIdStream). Throw IoError or CorruptStream.
void ExportCorpus(std::span<const TokenSequence> seqs, const std::string& path,
                  const Vocab& vocab);
std::vector<TokenSequence> ImportSamples(const std::string& path,
                                         const Vocab& vocab);
std::vector<IdSequence> ReadIdCorpus(const std::string& path,
                                     const Vocab& vocab);

}  // namespace genie

#endif  // GENIE_NGRAM_H_
