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

#include "genie/error.h"

namespace genie {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidTopology: return "InvalidTopology";
    case ErrorCode::kEmptyTopology: return "EmptyTopology";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kMissingVss: return "MissingVSS";
    case ErrorCode::kIllegalEdgeClass: return "IllegalEdgeClass";
    case ErrorCode::kIllegalEdge: return "IllegalEdge";
    case ErrorCode::kUnknownKind: return "UnknownKind";
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kEmptySequence: return "EmptySequence";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownDeviceCard: return "UnknownDeviceCard";
    case ErrorCode::kTooManyDevices: return "TooManyDevices";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kSequenceTooLong: return "SequenceTooLong";
    case ErrorCode::kIdOutOfRange: return "IdOutOfRange";
    case ErrorCode::kMissingTruncate: return "MissingTruncate";
    case ErrorCode::kDuplicateName: return "DuplicateName";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kBadOrder: return "BadOrder";
    case ErrorCode::kEmptyContext: return "EmptyContext";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kCorruptStream: return "CorruptStream";
  }
  return "Unknown";
}

namespace {

std::string FormatMessage(ErrorCode code, const std::string& detail,
                          std::optional<std::size_t> line,
                          std::optional<std::size_t> offset) {
  std::string msg(ErrorCodeName(code));
  if (line) msg += " (line " + std::to_string(*line) + ")";
  if (offset) msg += " (offset " + std::to_string(*offset) + ")";
  if (!detail.empty()) msg += ": " + detail;
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail,
             std::optional<std::size_t> line, std::optional<std::size_t> offset)
    : std::runtime_error(FormatMessage(code, detail, line, offset)),
      code_(code),
      detail_(detail),
      line_(line),
      offset_(offset) {}

}  // namespace genie
