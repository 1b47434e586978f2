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

#include "apsp/products.hpp"

#include <algorithm>

#include "apsp/errors.hpp"
#include "apsp/kernels.hpp"
#include "apsp/parallel.hpp"

namespace apsp {

DistMatrix minmax_product(const DistMatrix& a, const DistMatrix& b) {
  require_same_square(a, b, "minmax_product");
  const std::size_t n = a.rows();
  DistMatrix out = DistMatrix::square(n, kPosInf);
  parallel_for_rows(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto dst = out.row(i);
      auto ai = a.row(i);
      for (std::size_t k = 0; k < n; ++k) {
        const ExtInt aik = ai[k];
        auto bk = b.row(k);
        for (std::size_t j = 0; j < n; ++j) {
          const ExtInt m = std::max(aik, bk[j]);
          if (m < dst[j]) dst[j] = m;
        }
      }
    }
  });
  return out;
}

BitMatrix target_minmax_naive(const DistMatrix& a, const DistMatrix& b,
                              const DistMatrix& target) {
  require_same_square(a, b, "target_minmax_naive");
  require_same_square(a, target, "target_minmax_naive");
  const DistMatrix product = minmax_product(a, b);
  const std::size_t n = a.rows();
  BitMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (product(i, j) == target(i, j)) out.set(i, j);
    }
  }
  return out;
}

BitMatrix neg_inf_mask(const DistMatrix& b) {
  return mask_of(b, [](ExtInt x) { return x.is_neg_inf(); });
}

void require_infinite_entries(const DistMatrix& b, const char* what) {
  for (ExtInt x : b.entries()) {
    if (x.is_finite()) {
      throw InvalidInput(std::string(what) +
                         ": second operand must contain only -inf/+inf, found " +
                         x.to_string());
    }
  }
}

bool target_below_minmax(const DistMatrix& a, const DistMatrix& b,
                         const DistMatrix& target) {
  const DistMatrix product = minmax_product(a, b);
  for (std::size_t i = 0; i < target.rows(); ++i) {
    for (std::size_t j = 0; j < target.cols(); ++j) {
      if (target(i, j) > product(i, j)) return false;
    }
  }
  return true;
}

BitMatrix restricted_target_minmax(const DistMatrix& a, const DistMatrix& b,
                                   const DistMatrix& target,
                                   const RestrictedOptions& options,
                                   RestrictedStats* stats) {
  require_same_square(a, b, "restricted_target_minmax");
  require_same_square(a, target, "restricted_target_minmax");
  require_infinite_entries(b, "restricted_target_minmax");
  if (options.verify && !target_below_minmax(a, b, target)) {
    throw VerificationFailure(
        "restricted_target_minmax: target exceeds the (min,max) product");
  }
  const std::size_t n = a.rows();
  const RowIndex idx = build_row_index(a, options.threshold_exponent);
  const BitMatrix h = build_heavy_matrix(a, idx);
  const BitMatrix b_neg = neg_inf_mask(b);
  const BitMatrix f = bool_product(h, b_neg);

  BitMatrix out(n, n);
  std::vector<RestrictedStats> per_row(n);
  parallel_for_rows(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto sorted = idx.sorted_row(i);
      RestrictedStats& s = per_row[i];
      // Row words are disjoint between rows, so workers never share a word.
      for (std::size_t j = 0; j < n; ++j) {
        const ExtInt want = target(i, j);
        if (want.is_pos_inf()) {
          ++s.saturated_cells;
          out.set(i, j);
          continue;
        }
        const RowIndex::Run* run = idx.find(i, want);
        bool hit = false;
        if (run == nullptr) {
          ++s.absent_cells;
        } else if (run->heavy()) {
          ++s.heavy_cells;
          hit = f.get(static_cast<std::size_t>(run->heavy_row), j);
        } else {
          ++s.light_cells;
          for (std::uint32_t p = run->begin; p < run->end && !hit; ++p) {
            hit = b_neg.get(sorted[p].column, j);
          }
        }
        if (hit) out.set(i, j);
      }
    }
  });
  if (stats != nullptr) {
    *stats = RestrictedStats{};
    stats->heavy_rows = h.rows();
    for (const RestrictedStats& s : per_row) {
      stats->heavy_cells += s.heavy_cells;
      stats->light_cells += s.light_cells;
      stats->absent_cells += s.absent_cells;
      stats->saturated_cells += s.saturated_cells;
    }
  }
  return out;
}

}  // namespace apsp
