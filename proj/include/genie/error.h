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

#ifndef GENIE_ERROR_H_
#define GENIE_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace genie {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidTopology,
  kEmptyTopology,
  kDisconnected,
  kMissingVss,
  kIllegalEdgeClass,
  kIllegalEdge,
  kUnknownKind,
  kUnknownToken,
  kEmptySequence,
  kTooLarge,
  kSyntaxError,
  kUnknownDeviceCard,
  kTooManyDevices,
  kArityMismatch,
  kSequenceTooLong,
  kIdOutOfRange,
  kMissingTruncate,
  kDuplicateName,
  kEmptyCorpus,
  kBadOrder,
  kEmptyContext,
  kIoError,
  kCorruptStream,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type. `line` is
// set for netlist errors, `offset` for byte-stream errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail,
        std::optional<std::size_t> line = std::nullopt,
        std::optional<std::size_t> offset = std::nullopt);

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> offset() const { return offset_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> offset_;
};

}  // namespace genie

#endif  // GENIE_ERROR_H_
