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

#ifndef APSP_PRODUCTS_HPP_
#define APSP_PRODUCTS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "apsp/bit_matrix.hpp"
#include "apsp/dist_matrix.hpp"

namespace apsp {

// out[i][j] = min_k max(a[i][k], b[k][j]). Plain cubic loop.
DistMatrix minmax_product(const DistMatrix& a, const DistMatrix& b);

// out[i][j] = 1 iff target[i][j] equals the (min,max) product entry.
BitMatrix target_minmax_naive(const DistMatrix& a, const DistMatrix& b,
                              const DistMatrix& target);

// Smallest integer m >= n^t, for t in [0, 1]. Exact when t is a rational with
// a small denominator (0.25, 0.5, 1/3, ...).
std::uint64_t heavy_threshold(std::uint64_t n, double t);

// Which branch of the restricted algorithm resolves a target value.
enum class TargetPath { kHeavy, kLight, kAbsent };

// Per-row sorted (value, column) lists and the heavy-value registry.
class RowIndex {
 public:
  struct Entry {
    ExtInt value;
    std::uint32_t column;
    auto operator<=>(const Entry&) const = default;
  };
  // A maximal run of equal values inside one sorted row.
  struct Run {
    ExtInt value;
    std::uint32_t begin;  // offset into the sorted row
    std::uint32_t end;
    std::int64_t heavy_row;  // row of H, or -1 for a light value
    std::size_t size() const { return end - begin; }
    bool heavy() const { return heavy_row >= 0; }
  };

  std::size_t n() const { return n_; }
  std::uint64_t threshold() const { return threshold_; }

  std::span<const Entry> sorted_row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const Run> runs(std::size_t i) const {
    return {runs_.data() + run_offsets_[i], run_offsets_[i + 1] - run_offsets_[i]};
  }

  // Run of value x in row i, or nullptr if x does not occur there.
  const Run* find(std::size_t i, ExtInt x) const;
  TargetPath classify(std::size_t i, ExtInt x) const;
  std::optional<std::size_t> heavy_row(std::size_t i, ExtInt x) const;

  // (row, value) per row of H, in H's row order.
  std::span<const std::pair<std::size_t, ExtInt>> heavy_values() const {
    return heavy_;
  }
  std::size_t heavy_count() const { return heavy_.size(); }

 private:
  friend RowIndex build_row_index(const DistMatrix& a, double t);

  std::size_t n_ = 0;
  std::uint64_t threshold_ = 1;
  std::vector<Entry> entries_;
  std::vector<Run> runs_;
  std::vector<std::size_t> run_offsets_;
  std::vector<std::pair<std::size_t, ExtInt>> heavy_;
};

// Sorts every row and registers values that occur more than
// heavy_threshold(n, t) times in their row. Heavy rows are numbered in row
// order, then by increasing value.
RowIndex build_row_index(const DistMatrix& a, double t);

// One row per registered heavy (i, x): bit j is set iff a[i][j] == x.
BitMatrix build_heavy_matrix(const DistMatrix& a, const RowIndex& idx);

// B' of the restricted algorithm: bit (k, j) set iff b[k][j] == -inf.
BitMatrix neg_inf_mask(const DistMatrix& b);

// An input of the restricted target product: b is {-inf,+inf}-valued and
// target <= minmax_product(a, b) entrywise.
struct RestrictedInstance {
  DistMatrix a;
  DistMatrix b;
  DistMatrix target;
};

struct RestrictedOptions {
  double threshold_exponent = 0.5;
  // Checks target <= (min,max) product in O(n^3) before running.
  bool verify = false;
};

// Counters describing one run of the restricted algorithm.
struct RestrictedStats {
  std::size_t heavy_rows = 0;
  std::size_t heavy_cells = 0;
  std::size_t light_cells = 0;
  std::size_t absent_cells = 0;
  std::size_t saturated_cells = 0;  // +inf targets
};

// Throws InvalidInput unless every entry of b is -inf or +inf.
void require_infinite_entries(const DistMatrix& b, const char* what);
// True iff target <= minmax_product(a, b) entrywise.
bool target_below_minmax(const DistMatrix& a, const DistMatrix& b,
                         const DistMatrix& target);

// Heavy-light algorithm for the restricted target product. Heavy targets read
// F = H * B'; light targets scan their occurrence run in the sorted row;
// targets that do not occur in their row yield 0. A +inf target admits
// witnesses with b_kj = +inf and any a_ik, which the row lookup cannot see;
// since target <= minmax forces the product to +inf there, it yields 1.
BitMatrix restricted_target_minmax(const DistMatrix& a, const DistMatrix& b,
                                   const DistMatrix& target,
                                   const RestrictedOptions& options = {},
                                   RestrictedStats* stats = nullptr);

inline BitMatrix restricted_target_minmax(const RestrictedInstance& inst,
                                          const RestrictedOptions& options = {},
                                          RestrictedStats* stats = nullptr) {
  return restricted_target_minmax(inst.a, inst.b, inst.target, options, stats);
}

}  // namespace apsp

#endif  // APSP_PRODUCTS_HPP_
