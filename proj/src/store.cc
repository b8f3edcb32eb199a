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

#include "genie/store.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "genie/canonical.h"
#include "genie/error.h"
#include "genie/netlist.h"
#include "json.hpp"

namespace genie {
namespace {

namespace fs = std::filesystem;

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteText(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

}  // namespace

std::string SerializeStore(const CircuitStore& store) {
  nlohmann::ordered_json j;
  j["version"] = kStoreVersion;
  j["circuits"] = nlohmann::ordered_json::array();
  for (const StoredCircuit& c : store.circuits) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["hash"] = c.hash;
    e["netlist"] = c.netlist;
    e["devices"] = c.devices;
    if (c.label) e["label"] = *c.label;
    j["circuits"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

CircuitStore ParseStore(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("store: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != kStoreVersion) {
      throw Error(ErrorCode::kInvalidArgument, "store: unsupported version");
    }
    CircuitStore store;
    for (const auto& e : j.at("circuits")) {
      StoredCircuit c;
      c.name = e.at("name").get<std::string>();
      c.hash = e.at("hash").get<std::string>();
      c.netlist = e.at("netlist").get<std::string>();
      c.devices = e.at("devices").get<int>();
      if (e.contains("label")) c.label = e.at("label").get<std::string>();
      c.topology = ParseNetlist(c.netlist);
      store.circuits.push_back(std::move(c));
    }
    return store;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kSyntaxError, std::string("store: ") + e.what());
  }
}

void WriteStoreFile(const CircuitStore& store, const std::string& path) {
  WriteText(SerializeStore(store), path);
}

CircuitStore ReadStoreFile(const std::string& path) {
  return ParseStore(ReadText(path));
}

void WriteHashes(const std::vector<std::string>& hashes,
                 const std::string& path) {
  std::string text;
  for (const std::string& h : hashes) text += h + "\n";
  WriteText(text, path);
}

std::vector<std::string> ReadHashes(const std::string& path) {
  std::istringstream in(ReadText(path));
  std::vector<std::string> hashes;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (!line.empty()) hashes.push_back(line);
  }
  return hashes;
}

IngestResult IngestDirectory(const std::string& dir, const Execution& exec) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIoError, "not a directory: " + dir);
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".ckt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  struct Parsed {
    std::optional<StoredCircuit> circuit;
    std::string error;
  };
  std::vector<Parsed> parsed(files.size());
  ForEachIndex(files.size(), exec, [&](std::size_t i) {
    try {
      NetlistDoc doc = ParseNetlistDoc(ReadText(files[i].string()));
      StoredCircuit c;
      c.name = files[i].stem().string();
      c.topology = Normalize(doc.topology);
      c.hash = TopologyHash(c.topology);
      c.netlist = EmitNetlist(c.topology);
      c.devices = static_cast<int>(c.topology.devices.size());
      if (!doc.title.empty()) c.label = doc.title;
      parsed[i].circuit = std::move(c);
    } catch (const Error& e) {
      parsed[i].error = e.what();
    }
  });

  IngestResult result;
  result.files = static_cast<int>(files.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (!parsed[i].circuit) {
      result.failures.push_back({files[i].filename().string(), parsed[i].error});
      continue;
    }
    if (!seen.insert(parsed[i].circuit->hash).second) {
      ++result.duplicates;
      continue;
    }
    result.store.circuits.push_back(std::move(*parsed[i].circuit));
  }
  return result;
}

}  // namespace genie
