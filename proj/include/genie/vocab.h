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

#ifndef GENIE_VOCAB_H_
#define GENIE_VOCAB_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genie/euler.h"

namespace genie {

using TokenId = std::uint16_t;

inline constexpr int kDefaultMaxSeqLen = 1024;

// Token <-> id table. Ids 0..size()-1 are stored entries (TRUNCATE is the
// last); PAD is size() and exists only in padded in-memory arrays.
class Vocab {
 public:
  Vocab() = default;
  Vocab(std::vector<std::string> tokens, int max_seq_len);

  std::size_t size() const { return tokens_.size(); }
  int max_seq_len() const { return max_seq_len_; }
  TokenId truncate_id() const { return truncate_id_; }
  TokenId pad_id() const { return static_cast<TokenId>(tokens_.size()); }

  std::optional<TokenId> Find(std::string_view token) const;
  TokenId Id(std::string_view token) const;  // throws UnknownToken
  const std::string& Token(TokenId id) const;  // throws IdOutOfRange
  std::span<const std::string> tokens() const { return tokens_; }

  // Node for each id (nullopt for reserved and special tokens).
  std::span<const std::optional<NodeKey>> nodes() const { return nodes_; }

  // Highest device index per kind present in the table.
  int MaxCount(KindId kind) const { return max_count_.at(kind); }

  // SHA-256 of the vocab file text.
  const std::string& digest() const { return digest_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<std::optional<NodeKey>> nodes_;
  std::vector<int> max_count_;
  TokenId truncate_id_ = 0;
  int max_seq_len_ = kDefaultMaxSeqLen;
  std::string digest_;
};

struct VocabSegment {
  enum class Type { kDevices, kReserved, kTerminals };
  Type type = Type::kDevices;
  std::string kind;  // kDevices
  int count = 0;     // kDevices: instances; kReserved: placeholder tokens
  std::vector<std::string> names;  // kTerminals
};

// Lays segments out in order and appends TRUNCATE. A device segment emits,
// per instance, the device token followed by its pins. Reserved slots are
// named RSV<id>. Throws DuplicateName, UnknownKind or UnknownToken (for a
// terminal name outside the catalog).
Vocab BuildVocab(std::span<const VocabSegment> layout,
                 int max_seq_len = kDefaultMaxSeqLen);

// Data-driven builder: device blocks in lookup-table kind order, then the
// terminals in the given order, then TRUNCATE.
Vocab BuildVocab(std::span<const std::string> kinds,
                 std::span<const std::string> terminal_names,
                 const std::map<std::string, int>& max_counts,
                 int max_seq_len = kDefaultMaxSeqLen);

// The 1029-entry table whose printed anchors are NM1=0 ... VSS=1027,
// TRUNCATE=1028.
const Vocab& DefaultVocab();
std::vector<VocabSegment> DefaultVocabLayout();

// Content ids, TRUNCATE, then PAD up to max_seq_len. Throws EmptySequence,
// UnknownToken or SequenceTooLong.
std::vector<TokenId> EncodeIds(const TokenSequence& s, const Vocab& v);

// Tokens up to the first TRUNCATE. Throws IdOutOfRange or MissingTruncate.
TokenSequence DecodeIds(std::span<const TokenId> ids, const Vocab& v);

// "token<TAB>id" lines.
std::string FormatVocab(const Vocab& v);
Vocab ParseVocab(std::string_view text, int max_seq_len = kDefaultMaxSeqLen);
void WriteVocabFile(const std::string& path, const Vocab& v);
Vocab ReadVocabFile(const std::string& path,
                    int max_seq_len = kDefaultMaxSeqLen);

// Id stream: little-endian uint16 ids, each sequence followed by TRUNCATE,
// no padding.
std::string EncodeIdStream(std::span<const TokenSequence> seqs, const Vocab& v);
// Each returned sequence keeps its trailing TRUNCATE. Throws CorruptStream
// (odd length, id >= vocab size, unterminated tail).
std::vector<std::vector<TokenId>> DecodeIdStream(std::string_view bytes,
                                                 const Vocab& v);

}  // namespace genie

#endif  // GENIE_VOCAB_H_
