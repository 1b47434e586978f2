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

// Property checks shared by the unit and acceptance suites.

#ifndef APSP_TESTS_SUPPORT_INVARIANTS_HPP_
#define APSP_TESTS_SUPPORT_INVARIANTS_HPP_

#include "apsp/dist_matrix.hpp"

namespace apsp::testing {

struct CanonicalReport {
  bool distances_preserved = false;
  bool hops_not_increased = false;
  bool zero_free = false;
  bool all() const { return distances_preserved && hops_not_increased && zero_free; }
};

// Checks canonical_adjacency(a) against a:
//  - same oracle distances;
//  - for every finite pair, the fewest hops over optimal walks in the
//    canonical graph is at most that in the original;
//  - dropping the canonical graph's zero-weight edges and then taking the
//    minimum with the direct edge leaves every distance unchanged.
CanonicalReport check_canonical(const DistMatrix& a);

}  // namespace apsp::testing

#endif  // APSP_TESTS_SUPPORT_INVARIANTS_HPP_
