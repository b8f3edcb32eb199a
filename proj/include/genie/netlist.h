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

#ifndef GENIE_NETLIST_H_
#define GENIE_NETLIST_H_

// SPICE-subset ".ckt" reader/writer. Supported cards, one per line:
//
//   Mname d g s b MODEL      MOS; a model name containing 'P' selects PM
//   Qname c b e MODEL        BJT; "PNP" in the model selects PNP
//   Rname p n [value]        also C and L
//   Dname p n [model]
//   Xname pins... CELL       CELL is XOR, INV or TG
//
// '*' starts a comment line, ".title" sets the title, ".end" stops parsing and
// other dot-directives are ignored. Values and models are discarded.

#include <string>
#include <string_view>

#include "genie/topology.h"

namespace genie {

struct NetlistDoc {
  std::string title;
  Topology topology;
};

NetlistDoc ParseNetlistDoc(std::string_view text);

// Throws SyntaxError, UnknownDeviceCard, TooManyDevices or ArityMismatch.
Topology ParseNetlist(std::string_view text);

// Cards in kind order then index; internal nets are named n1, n2, ... by
// their smallest member, terminal nets keep the terminal name.
std::string EmitNetlist(const Topology& t);

}  // namespace genie

#endif  // GENIE_NETLIST_H_
