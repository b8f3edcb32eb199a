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

#ifndef GENIE_PARALLEL_H_
#define GENIE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace genie {

enum class Backend { kSerial, kOpenMP };

struct Execution {
  Backend backend = Backend::kSerial;
  int threads = 0;  // 0 = OpenMP default

  static Execution Serial() { return {Backend::kSerial, 1}; }
  static Execution Parallel(int threads = 0) {
    return {Backend::kOpenMP, threads};
  }
  // --jobs convention: 1 is the serial reference path, 0 means all cores.
  static Execution FromJobs(int jobs) {
    return jobs == 1 ? Serial() : Parallel(jobs);
  }
};

// Calls fn(i) for every i in [0, n). Each index writes only its own output
// slot, so results do not depend on the backend or thread count. If any call
// throws, the exception from the lowest index is rethrown after the loop.
void ForEachIndex(std::size_t n, const Execution& exec,
                  const std::function<void(std::size_t)>& fn);

int MaxThreads();

}  // namespace genie

#endif  // GENIE_PARALLEL_H_
