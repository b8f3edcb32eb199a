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

#include "genie/vocab.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "genie/digest.h"
#include "genie/error.h"

namespace genie {

Vocab::Vocab(std::vector<std::string> tokens, int max_seq_len)
    : tokens_(std::move(tokens)),
      max_count_(DeviceKinds().size(), 0),
      max_seq_len_(max_seq_len) {
  if (tokens_.empty() || tokens_.back() != kTruncateToken) {
    throw Error(ErrorCode::kInvalidArgument, "vocab must end with TRUNCATE");
  }
  if (tokens_.size() >= 0xffff) {
    throw Error(ErrorCode::kInvalidArgument, "vocab too large for 16-bit ids");
  }
  if (max_seq_len < 2) {
    throw Error(ErrorCode::kInvalidArgument, "max_seq_len must be >= 2");
  }
  nodes_.reserve(tokens_.size());
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (!ids_.emplace(tokens_[i], static_cast<TokenId>(i)).second) {
      throw Error(ErrorCode::kDuplicateName, tokens_[i]);
    }
    auto node = ParseNodeName(tokens_[i]);
    if (node && !node->IsTerminal()) {
      max_count_[node->kind] = std::max<int>(max_count_[node->kind], node->index);
    }
    nodes_.push_back(node);
  }
  truncate_id_ = static_cast<TokenId>(tokens_.size() - 1);
  digest_ = Sha256Hex(FormatVocab(*this));
}

std::optional<TokenId> Vocab::Find(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocab::Id(std::string_view token) const {
  auto id = Find(token);
  if (!id) throw Error(ErrorCode::kUnknownToken, std::string(token));
  return *id;
}

const std::string& Vocab::Token(TokenId id) const {
  if (id >= tokens_.size()) {
    throw Error(ErrorCode::kIdOutOfRange, std::to_string(id));
  }
  return tokens_[id];
}

Vocab BuildVocab(std::span<const VocabSegment> layout, int max_seq_len) {
  std::vector<std::string> tokens;
  std::set<std::string> kinds_seen;
  for (const VocabSegment& seg : layout) {
    switch (seg.type) {
      case VocabSegment::Type::kDevices: {
        const auto kind = FindKind(seg.kind);
        if (!kind) throw Error(ErrorCode::kUnknownKind, seg.kind);
        if (!kinds_seen.insert(seg.kind).second) {
          throw Error(ErrorCode::kDuplicateName, seg.kind);
        }
        if (seg.count < 0 || seg.count > GetKind(*kind).max_count) {
          throw Error(ErrorCode::kInvalidArgument,
                      "bad instance count for " + seg.kind);
        }
        for (int i = 1; i <= seg.count; ++i) {
          const Device d{*kind, static_cast<std::uint16_t>(i)};
          tokens.push_back(d.Name());
          for (std::size_t r = 0; r < GetKind(*kind).roles.size(); ++r) {
            tokens.push_back(NodeName(NodeKey::MakePin(d, static_cast<int>(r))));
          }
        }
        break;
      }
      case VocabSegment::Type::kReserved:
        for (int i = 0; i < seg.count; ++i) {
          tokens.push_back("RSV" + std::to_string(tokens.size()));
        }
        break;
      case VocabSegment::Type::kTerminals:
        for (const std::string& name : seg.names) {
          if (!FindTerminal(name)) throw Error(ErrorCode::kUnknownToken, name);
          tokens.push_back(name);
        }
        break;
    }
  }
  tokens.emplace_back(kTruncateToken);
  return Vocab(std::move(tokens), max_seq_len);
}

Vocab BuildVocab(std::span<const std::string> kinds,
                 std::span<const std::string> terminal_names,
                 const std::map<std::string, int>& max_counts,
                 int max_seq_len) {
  std::vector<std::pair<KindId, std::string>> ordered;
  for (const std::string& k : kinds) {
    const auto id = FindKind(k);
    if (!id) throw Error(ErrorCode::kUnknownKind, k);
    ordered.emplace_back(*id, k);
  }
  std::stable_sort(ordered.begin(), ordered.end());
  std::vector<VocabSegment> layout;
  for (const auto& [id, name] : ordered) {
    auto it = max_counts.find(name);
    const int count = it == max_counts.end() ? GetKind(id).max_count : it->second;
    layout.push_back({VocabSegment::Type::kDevices, name, count, {}});
  }
  layout.push_back({VocabSegment::Type::kTerminals, "", 0,
                    {terminal_names.begin(), terminal_names.end()}});
  return BuildVocab(layout, max_seq_len);
}

std::vector<VocabSegment> DefaultVocabLayout() {
  using T = VocabSegment::Type;
  std::vector<VocabSegment> layout;
  for (const DeviceKind& kind : DeviceKinds()) {
    layout.push_back({T::kDevices, std::string(kind.name), kind.max_count, {}});
    if (kind.name == "XOR") layout.push_back({T::kReserved, "", 35, {}});
  }
  std::vector<std::string> analog;
  std::vector<std::string> tail;
  for (std::string_view name : TerminalNames()) {
    const bool late = name.starts_with("LOGICQB") || name == "VDD" ||
                      name == "VSS";
    (late ? tail : analog).emplace_back(name);
  }
  layout.push_back({T::kTerminals, "", 0, analog});
  layout.push_back({T::kReserved, "", 72, {}});
  layout.push_back({T::kTerminals, "", 0, tail});
  return layout;
}

const Vocab& DefaultVocab() {
  static const Vocab vocab = BuildVocab(DefaultVocabLayout());
  return vocab;
}

std::vector<TokenId> EncodeIds(const TokenSequence& s, const Vocab& v) {
  if (s.tokens.empty()) {
    throw Error(ErrorCode::kEmptySequence, "nothing to encode");
  }
  if (s.tokens.size() + 1 > static_cast<std::size_t>(v.max_seq_len())) {
    throw Error(ErrorCode::kSequenceTooLong,
                std::to_string(s.tokens.size()) + " tokens leave no room for "
                "TRUNCATE within " + std::to_string(v.max_seq_len()));
  }
  std::vector<TokenId> ids;
  ids.reserve(v.max_seq_len());
  for (const std::string& token : s.tokens) ids.push_back(v.Id(token));
  ids.push_back(v.truncate_id());
  ids.resize(v.max_seq_len(), v.pad_id());
  return ids;
}

TokenSequence DecodeIds(std::span<const TokenId> ids, const Vocab& v) {
  TokenSequence s;
  s.source = SequenceSource::kGenerated;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const TokenId id = ids[i];
    if (id == v.truncate_id()) return s;
    if (id == v.pad_id()) break;
    if (id > v.pad_id()) {
      throw Error(ErrorCode::kIdOutOfRange, std::to_string(id), std::nullopt,
                  i);
    }
    s.tokens.push_back(v.Token(id));
  }
  throw Error(ErrorCode::kMissingTruncate, "no TRUNCATE before padding or end");
}

std::string FormatVocab(const Vocab& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += v.tokens()[i];
    out += '\t';
    out += std::to_string(i);
    out += '\n';
  }
  return out;
}

Vocab ParseVocab(std::string_view text, int max_seq_len) {
  std::vector<std::pair<long, std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    long id = -1;
    if (tab != std::string::npos) {
      const char* first = line.data() + tab + 1;
      const char* last = line.data() + line.size();
      auto [ptr, ec] = std::from_chars(first, last, id);
      if (ec != std::errc() || ptr != last) id = -1;
    }
    if (id < 0) {
      throw Error(ErrorCode::kSyntaxError, "expected token<TAB>id", line_no);
    }
    rows.emplace_back(id, line.substr(0, tab));
  }
  std::sort(rows.begin(), rows.end());
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first != static_cast<long>(i)) {
      throw Error(ErrorCode::kSyntaxError,
                  "ids must be dense from 0; missing " + std::to_string(i));
    }
    tokens.push_back(std::move(rows[i].second));
  }
  return Vocab(std::move(tokens), max_seq_len);
}

void WriteVocabFile(const std::string& path, const Vocab& v) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << FormatVocab(v);
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

Vocab ReadVocabFile(const std::string& path, int max_seq_len) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseVocab(buffer.str(), max_seq_len);
}

std::string EncodeIdStream(std::span<const TokenSequence> seqs,
                           const Vocab& v) {
  std::string bytes;
  auto put = [&bytes](TokenId id) {
    bytes.push_back(static_cast<char>(id & 0xff));
    bytes.push_back(static_cast<char>(id >> 8));
  };
  for (const TokenSequence& s : seqs) {
    for (const std::string& token : s.tokens) put(v.Id(token));
    put(v.truncate_id());
  }
  return bytes;
}

std::vector<std::vector<TokenId>> DecodeIdStream(std::string_view bytes,
                                                 const Vocab& v) {
  if (bytes.size() % 2 != 0) {
    throw Error(ErrorCode::kCorruptStream, "odd byte count", std::nullopt,
                bytes.size());
  }
  std::vector<std::vector<TokenId>> seqs;
  std::vector<TokenId> current;
  for (std::size_t off = 0; off < bytes.size(); off += 2) {
    const auto id = static_cast<TokenId>(
        static_cast<unsigned char>(bytes[off]) |
        (static_cast<unsigned char>(bytes[off + 1]) << 8));
    if (id >= v.size()) {
      throw Error(ErrorCode::kCorruptStream,
                  "id " + std::to_string(id) + " outside vocab", std::nullopt,
                  off);
    }
    current.push_back(id);
    if (id == v.truncate_id()) {
      seqs.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) {
    throw Error(ErrorCode::kCorruptStream, "trailing ids without TRUNCATE",
                std::nullopt, bytes.size());
  }
  return seqs;
}

}  // namespace genie
