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

#include "support/invariants.hpp"

#include <algorithm>

#include "apsp/graph.hpp"
#include "support/oracles.hpp"

namespace apsp::testing {

CanonicalReport check_canonical(const DistMatrix& a) {
  CanonicalReport report;
  const std::size_t n = a.rows();
  const DistMatrix c = canonical_adjacency(a);
  const DistMatrix star_a = oracle_apsp(a);
  const DistMatrix star_c = oracle_apsp(c);
  report.distances_preserved = star_a == star_c;

  const auto hops_a = min_optimal_hops(a, star_a);
  const auto hops_c = min_optimal_hops(c, star_c);
  report.hops_not_increased = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (star_a(i, j).is_finite() && hops_c[i][j] > hops_a[i][j]) {
        report.hops_not_increased = false;
      }

  DistMatrix nonzero = c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && c(i, j) == ExtInt(0)) nonzero(i, j) = kPosInf;
  const DistMatrix star_nonzero = oracle_apsp(nonzero);
  report.zero_free = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::min(star_nonzero(i, j), c(i, j)) != star_c(i, j)) report.zero_free = false;
  return report;
}

}  // namespace apsp::testing
