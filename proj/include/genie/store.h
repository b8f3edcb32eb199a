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

#ifndef GENIE_STORE_H_
#define GENIE_STORE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genie/parallel.h"
#include "genie/topology.h"

namespace genie {

// One circuit of a store. `netlist` is the emitted text; `topology` is its
// parse and is not serialized separately.
struct StoredCircuit {
  std::string name;
  std::string hash;  // TopologyHash
  std::string netlist;
  int devices = 0;
  std::optional<std::string> label;
  Topology topology;
};

// JSON: {"version": 1, "circuits": [{name, hash, netlist, devices, label?}]}
struct CircuitStore {
  std::vector<StoredCircuit> circuits;
};

inline constexpr int kStoreVersion = 1;

std::string SerializeStore(const CircuitStore& store);
CircuitStore ParseStore(std::string_view json);
void WriteStoreFile(const CircuitStore& store, const std::string& path);
CircuitStore ReadStoreFile(const std::string& path);

// hashes.txt: one lowercase hex digest per line.
void WriteHashes(const std::vector<std::string>& hashes,
                 const std::string& path);
std::vector<std::string> ReadHashes(const std::string& path);

struct IngestFailure {
  std::string file;
  std::string message;
};

struct IngestResult {
  CircuitStore store;  // unique circuits, file-name order
  std::vector<IngestFailure> failures;
  int duplicates = 0;
  int files = 0;
};

// Parses every *.ckt file in `dir` (sorted by file name). The circuit name is
// the file stem and the label is the .title line, if any. Circuits whose
// topology hash was already seen are dropped.
IngestResult IngestDirectory(const std::string& dir,
                             const Execution& exec = Execution::Serial());

}  // namespace genie

#endif  // GENIE_STORE_H_
