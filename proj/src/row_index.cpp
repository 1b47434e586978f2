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

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "apsp/errors.hpp"
#include "apsp/products.hpp"

namespace apsp {
namespace {

struct Fraction {
  std::uint64_t num;
  std::uint64_t den;
};

constexpr std::uint64_t kMaxDenominator = 64;

// Continued-fraction expansion of t, accepted if some convergent with a
// denominator <= kMaxDenominator reproduces t to double precision.
std::optional<Fraction> as_small_fraction(double t) {
  long double x = t;
  std::uint64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int step = 0; step < 40; ++step) {
    const long double a = std::floor(x);
    const auto ai = static_cast<std::uint64_t>(a);
    const std::uint64_t h2 = ai * h1 + h0;
    const std::uint64_t k2 = ai * k1 + k0;
    if (k2 > kMaxDenominator) return std::nullopt;
    if (std::fabs(static_cast<long double>(h2) / k2 - t) <= 1e-15L) {
      return Fraction{h2, k2};
    }
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    const long double frac = x - a;
    if (frac <= 0) return std::nullopt;
    x = 1 / frac;
  }
  return std::nullopt;
}

// base^exp, or nullopt if it exceeds limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (std::uint64_t e = 0; e < exp; ++e) {
    if (base != 0 && acc > limit / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

// m >= n^(p/q) with p/q in lowest terms. Decided in the log domain; a near
// tie is resolved exactly, since m^q == n^p forces n = r^q and m = r^p.
bool at_least_power(std::uint64_t m, std::uint64_t n, Fraction f) {
  if (f.num == 0) return m >= 1;
  const long double lhs = f.den * std::log(static_cast<long double>(m));
  const long double rhs = f.num * std::log(static_cast<long double>(n));
  if (std::fabs(lhs - rhs) > 1e-9L) return lhs > rhs;
  const auto r = static_cast<std::uint64_t>(
      std::llround(std::pow(static_cast<long double>(n), 1.0L / f.den)));
  const auto rq = checked_pow(r, f.den, n);
  const auto rp = checked_pow(r, f.num, m);
  if (rq && *rq == n && rp && *rp == m) return true;
  return lhs > rhs;
}

}  // namespace

std::uint64_t heavy_threshold(std::uint64_t n, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw InvalidInput("threshold exponent must lie in [0, 1], got " +
                       std::to_string(t));
  }
  if (n <= 1) return 1;
  const std::optional<Fraction> frac = as_small_fraction(t);
  auto satisfies = [&](std::uint64_t m) {
    if (frac) return at_least_power(m, n, *frac);
    return static_cast<long double>(m) >=
           std::pow(static_cast<long double>(n), static_cast<long double>(t));
  };
  std::uint64_t lo = 1, hi = n;  // n^t <= n, so hi always satisfies
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (satisfies(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

RowIndex build_row_index(const DistMatrix& a, double t) {
  require_square(a, "build_row_index");
  RowIndex idx;
  const std::size_t n = a.rows();
  idx.n_ = n;
  idx.threshold_ = heavy_threshold(n, t);
  idx.entries_.resize(n * n);
  idx.run_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto src = a.row(i);
    RowIndex::Entry* row = idx.entries_.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = {src[j], static_cast<std::uint32_t>(j)};
    }
    std::sort(row, row + n);
    std::size_t begin = 0;
    while (begin < n) {
      std::size_t end = begin + 1;
      while (end < n && row[end].value == row[begin].value) ++end;
      std::int64_t heavy_row = -1;
      if (end - begin > idx.threshold_) {
        heavy_row = static_cast<std::int64_t>(idx.heavy_.size());
        idx.heavy_.emplace_back(i, row[begin].value);
      }
      idx.runs_.push_back({row[begin].value, static_cast<std::uint32_t>(begin),
                           static_cast<std::uint32_t>(end), heavy_row});
      begin = end;
    }
    idx.run_offsets_[i + 1] = idx.runs_.size();
  }
  return idx;
}

const RowIndex::Run* RowIndex::find(std::size_t i, ExtInt x) const {
  auto r = runs(i);
  auto it = std::lower_bound(r.begin(), r.end(), x,
                             [](const Run& run, ExtInt v) { return run.value < v; });
  if (it == r.end() || it->value != x) return nullptr;
  return &*it;
}

TargetPath RowIndex::classify(std::size_t i, ExtInt x) const {
  const Run* run = find(i, x);
  if (run == nullptr) return TargetPath::kAbsent;
  return run->heavy() ? TargetPath::kHeavy : TargetPath::kLight;
}

std::optional<std::size_t> RowIndex::heavy_row(std::size_t i, ExtInt x) const {
  const Run* run = find(i, x);
  if (run == nullptr || !run->heavy()) return std::nullopt;
  return static_cast<std::size_t>(run->heavy_row);
}

BitMatrix build_heavy_matrix(const DistMatrix& a, const RowIndex& idx) {
  require_square(a, "build_heavy_matrix");
  if (a.rows() != idx.n()) {
    throw DimensionError("build_heavy_matrix: index built for a different size");
  }
  BitMatrix h(idx.heavy_count(), a.cols());
  for (std::size_t i = 0; i < idx.n(); ++i) {
    auto sorted = idx.sorted_row(i);
    for (const RowIndex::Run& run : idx.runs(i)) {
      if (!run.heavy()) continue;
      const auto q = static_cast<std::size_t>(run.heavy_row);
      for (std::uint32_t p = run.begin; p < run.end; ++p) {
        const RowIndex::Entry& e = sorted[p];
        if (a(i, e.column) != run.value) {
          throw InvalidInput("build_heavy_matrix: index does not match matrix");
        }
        h.set(q, e.column);
      }
    }
  }
  return h;
}

}  // namespace apsp
