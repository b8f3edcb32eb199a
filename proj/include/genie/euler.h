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

#ifndef GENIE_EULER_H_
#define GENIE_EULER_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genie/topology.h"

namespace genie {

inline constexpr std::string_view kTruncateToken = "TRUNCATE";

enum class SequenceSource : std::uint8_t { kEncoded, kGenerated };

// A node walk. `tokens` holds the content only; the TRUNCATE sentinel is
// added by the text and id formats.
struct TokenSequence {
  std::vector<std::string> tokens;
  SequenceSource source = SequenceSource::kEncoded;

  bool operator==(const TokenSequence& other) const {
    return tokens == other.tokens;
  }
};

// Eulerian circuit of the doubled graph, starting and ending at VSS, of
// length 2|E| + 1. Each seed draws a circuit uniformly at random: the exit
// order at every node is a seeded permutation whose final arcs form a
// uniformly sampled spanning tree towards VSS, and Hierholzer's walk over
// those orders never has to splice. Throws MissingVSS or Disconnected.
TokenSequence Encode(const PinGraph& g, std::uint64_t order_seed);

// Parses token names; throws UnknownToken. Parsing stops at TRUNCATE.
std::vector<NodeKey> ParseTokens(const TokenSequence& s);

// Throws IllegalEdge at the first consecutive pair no edge may join.
void CheckLegalEdges(std::span<const NodeKey> walk);

// Graph whose edges are the consecutive pairs of the walk, with device stars
// completed for every device mentioned. Repeated edges collapse. Throws
// EmptySequence, UnknownToken or IllegalEdge.
PinGraph Decode(const TokenSequence& s);

enum class EulerViolation {
  kNone,
  kEmpty,
  kUnknownToken,
  kNotAnchored,
  kNotClosed,
  kNotAnEdge,
  kArcReused,
  kArcsMissing,
};

std::string_view EulerViolationName(EulerViolation v);

struct EulerCheck {
  bool ok = false;
  EulerViolation reason = EulerViolation::kNone;
  std::string detail;
};

// True iff `s` is a closed walk from VSS using every arc of the doubled `g`
// exactly once.
EulerCheck VerifyEuler(const TokenSequence& s, const PinGraph& g);

// Text format: one sequence per line, space separated, ending in TRUNCATE.
std::string FormatSequenceLine(const TokenSequence& s);
TokenSequence ParseSequenceLine(std::string_view line);
void WriteSequences(std::ostream& out, std::span<const TokenSequence> seqs);
std::vector<TokenSequence> ReadSequences(std::istream& in);
void WriteSequenceFile(const std::string& path,
                       std::span<const TokenSequence> seqs);
std::vector<TokenSequence> ReadSequenceFile(const std::string& path);

}  // namespace genie

#endif  // GENIE_EULER_H_
