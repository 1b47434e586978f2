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

#include "apsp/kernels.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "apsp/errors.hpp"
#include "apsp/parallel.hpp"

namespace apsp {

DistMatrix minplus_product(const DistMatrix& a, const DistMatrix& b) {
  require_same_square(a, b, "minplus_product");
  const std::size_t n = a.rows();
  DistMatrix out = DistMatrix::square(n, kPosInf);
  parallel_for_rows(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto dst = out.row(i);
      auto ai = a.row(i);
      for (std::size_t k = 0; k < n; ++k) {
        const ExtInt aik = ai[k];
        if (aik.is_pos_inf()) continue;
        auto bk = b.row(k);
        for (std::size_t j = 0; j < n; ++j) {
          const ExtInt s = ext_add(aik, bk[j]);
          if (s < dst[j]) dst[j] = s;
        }
      }
    }
  });
  return out;
}

DistMatrix bounded_hop_closure(const DistMatrix& a, std::uint64_t hops) {
  require_square(a, "bounded_hop_closure");
  if (hops == 0) throw InvalidInput("bounded_hop_closure: hop bound must be >= 1");
  // Walk the bits from the most significant one down: result tracks
  // A^(prefix of hops), squaring per bit and multiplying by A on set bits.
  const int top = std::bit_width(hops) - 1;
  DistMatrix result = a;
  for (int bit = top - 1; bit >= 0; --bit) {
    result = minplus_product(result, result);
    if ((hops >> bit) & 1u) result = minplus_product(result, a);
  }
  return result;
}

BitMatrix bool_product(const BitMatrix& p, const BitMatrix& q) {
  if (p.cols() != q.rows()) {
    throw DimensionError("bool_product: inner dimensions " +
                         std::to_string(p.cols()) + " and " +
                         std::to_string(q.rows()) + " disagree");
  }
  BitMatrix out(p.rows(), q.cols());
  const std::size_t words = q.words_per_row();
  parallel_for_rows(p.rows(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto acc = out.row_words(i);
      auto pi = p.row_words(i);
      for (std::size_t w = 0; w < pi.size(); ++w) {
        BitMatrix::Word bits = pi[w];
        while (bits) {
          const std::size_t k =
              w * BitMatrix::kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          auto qk = q.row_words(k);
          for (std::size_t x = 0; x < words; ++x) acc[x] |= qk[x];
        }
      }
    }
  });
  return out;
}

BitMatrix bool_closure(const BitMatrix& p) {
  if (!p.is_square()) throw DimensionError("bool_closure: expected a square matrix");
  const std::size_t n = p.rows();
  BitMatrix reach = p;
  for (std::size_t i = 0; i < n; ++i) reach.set(i, i);
  // After s squarings reach covers paths of length <= 2^s; stop at a fixed
  // point, which arrives after at most ceil(log2 n) rounds.
  while (true) {
    BitMatrix next = bool_product(reach, reach);
    if (next == reach) return reach;
    reach = std::move(next);
  }
}

}  // namespace apsp
