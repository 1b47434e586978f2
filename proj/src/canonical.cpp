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

#include <string>

#include "apsp/errors.hpp"
#include "apsp/graph.hpp"
#include "apsp/kernels.hpp"

namespace apsp {

DistMatrix canonical_adjacency(const DistMatrix& a) {
  require_square(a, "canonical_adjacency");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExtInt x = a(i, j);
      const bool ok = x.is_pos_inf() || x == ExtInt(-1) || x == ExtInt(0) ||
                      (x == ExtInt(1) && i != j);
      if (!ok) {
        throw InvalidInput("canonical_adjacency: entry (" + std::to_string(i) +
                           "," + std::to_string(j) + ") = " + x.to_string() +
                           " outside {-1,0,1,+inf}");
      }
    }
  }

  BitMatrix zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && a(i, j) == ExtInt(0)) zero.set(i, j);
    }
  }
  const BitMatrix zero_reach = bool_closure(zero);
  // Composite edges: zero run, one edge of weight w, zero run.
  auto composite = [&](int w) {
    const BitMatrix edges = mask_of(a, [w](ExtInt x) { return x == ExtInt(w); });
    return bool_product(bool_product(zero_reach, edges), zero_reach);
  };
  const BitMatrix neg = composite(-1);
  const BitMatrix pos = composite(1);

  DistMatrix c = DistMatrix::square(n, kPosInf);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (neg.get(i, j)) {
        c(i, j) = -1;
      } else if (i == j || zero_reach.get(i, j)) {
        c(i, j) = 0;
      } else if (pos.get(i, j)) {
        c(i, j) = 1;
      }
    }
  }
  return c;
}

}  // namespace apsp
