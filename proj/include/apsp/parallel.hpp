// Copyright 2026 The signed-apsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APSP_PARALLEL_HPP_
#define APSP_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace apsp {

// Worker-count hint used by the row-parallel kernels. 0 and 1 both mean
// run on the calling thread. Results never depend on this value.
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
void parallel_for_rows(
    std::size_t n,
    const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace apsp

#endif  // APSP_PARALLEL_HPP_
