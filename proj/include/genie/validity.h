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

#ifndef GENIE_VALIDITY_H_
#define GENIE_VALIDITY_H_

#include <string>
#include <string_view>
#include <vector>

#include "genie/euler.h"
#include "genie/topology.h"

namespace genie {

enum class ViolationCode {
  kFloatingPin,
  kTerminalShort,
  kDisconnected,
  kNoVss,
  kNoDevices,
  kDegenerateDevice,
  kUnknownToken,
  kIllegalEdge,
  kEmptySequence,
};

// Upper-case report names, e.g. "FLOATING_PIN".
std::string_view ViolationName(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct ValidityReport {
  bool valid = false;  // true iff violations is empty
  std::vector<Violation> violations;
  bool euler_strict = false;

  bool Has(ViolationCode code) const;
};

// Structural stand-in for a simulator check. Never throws.
//   FLOATING_PIN       pin in no net or alone in its net
//   TERMINAL_SHORT     two distinct terminals in one net
//   DISCONNECTED       devices and nets do not form one connected circuit
//   NO_VSS / NO_DEVICES
//   DEGENERATE_DEVICE  every pin of a device sits in the same net
ValidityReport CheckTopology(const Topology& t);

// Token scan, legal-edge scan, decode, net recovery, then CheckTopology.
// The first failing stage ends the pipeline. euler_strict is VerifyEuler
// against the decoded graph.
ValidityReport CheckSequence(const TokenSequence& s);

// {"seq_index":i,"verdict":"Valid","violations":[...],"euler_strict":b}
std::string ReportJsonLine(std::size_t seq_index, const ValidityReport& r);

}  // namespace genie

#endif  // GENIE_VALIDITY_H_
