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

#ifndef APSP_KERNELS_HPP_
#define APSP_KERNELS_HPP_

#include <cstdint>

#include "apsp/bit_matrix.hpp"
#include "apsp/dist_matrix.hpp"

namespace apsp {

// out[i][j] = min_k ext_add(a[i][k], b[k][j]).
DistMatrix minplus_product(const DistMatrix& a, const DistMatrix& b);

// Minimum weight over walks of at most `hops` edges. Requires a diagonal
// <= 0 so that the diagonal doubles as the 0-hop walk; the (min,+) power is
// then exactly the bounded-hop matrix. Uses square-and-multiply on the
// binary digits of `hops`.
DistMatrix bounded_hop_closure(const DistMatrix& a, std::uint64_t hops);

// Boolean product over packed rows: each set bit p[i][k] ORs row k of q into
// row i of the result.
BitMatrix bool_product(const BitMatrix& p, const BitMatrix& q);

// Reflexive-transitive closure, by repeated squaring of (I | p).
BitMatrix bool_closure(const BitMatrix& p);

// Bit matrix of entries satisfying pred.
template <typename Pred>
BitMatrix mask_of(const DistMatrix& m, Pred pred) {
  BitMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (pred(r[j])) out.set(i, j);
    }
  }
  return out;
}

}  // namespace apsp

#endif  // APSP_KERNELS_HPP_
