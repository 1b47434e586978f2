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

#include "support/oracles.hpp"

#include <algorithm>
#include <limits>

namespace apsp::testing {

ExtInt ref_add(ExtInt a, ExtInt b) {
  if (a == kPosInf || b == kPosInf) return kPosInf;
  if (a == kNegInf || b == kNegInf) return kNegInf;
  return ExtInt(a.value() + b.value());
}

DistMatrix naive_minplus(const DistMatrix& a, const DistMatrix& b) {
  const std::size_t n = a.rows();
  DistMatrix out(n, b.cols(), kPosInf);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        out(i, j) = std::min(out(i, j), ref_add(a(i, k), b(k, j)));
  return out;
}

DistMatrix naive_minmax(const DistMatrix& a, const DistMatrix& b) {
  const std::size_t n = a.rows();
  DistMatrix out(n, b.cols(), kPosInf);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k)
        out(i, j) = std::min(out(i, j), std::max(a(i, k), b(k, j)));
  return out;
}

namespace {

void extend_walks(const DistMatrix& a, std::size_t start, std::size_t at,
                  std::int64_t weight, std::size_t hops_left, DistMatrix& best) {
  if (ExtInt(weight) < best(start, at)) best(start, at) = weight;
  if (hops_left == 0) return;
  for (std::size_t next = 0; next < a.cols(); ++next) {
    const ExtInt w = a(at, next);
    if (w == kPosInf) continue;
    if (at == next && w == ExtInt(0)) continue;  // 0-hop convention, not an edge
    extend_walks(a, start, next, weight + w.value(), hops_left - 1, best);
  }
}

}  // namespace

DistMatrix enumerate_walks(const DistMatrix& a, std::size_t hops) {
  DistMatrix best = DistMatrix::square(a.rows(), kPosInf);
  for (std::size_t s = 0; s < a.rows(); ++s) extend_walks(a, s, s, 0, hops, best);
  return best;
}

BitMatrix naive_bool_product(const BitMatrix& p, const BitMatrix& q) {
  BitMatrix out(p.rows(), q.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) {
      bool v = false;
      for (std::size_t k = 0; k < p.cols(); ++k) v = v || (p.get(i, k) && q.get(k, j));
      if (v) out.set(i, j);
    }
  return out;
}

BitMatrix warshall_closure(const BitMatrix& p) {
  const std::size_t n = p.rows();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = i == j || p.get(i, j);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  BitMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r[i][j]) out.set(i, j);
  return out;
}

namespace {

struct PlainEdge {
  std::size_t u, v;
  std::int64_t w;
};

std::vector<PlainEdge> edges_of(const DistMatrix& a) {
  std::vector<PlainEdge> edges;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const ExtInt x = a(i, j);
      if (x == kPosInf) continue;
      if (i == j && x >= ExtInt(0)) continue;
      edges.push_back({i, j, x.value()});
    }
  return edges;
}

}  // namespace

DistMatrix bellman_ford_apsp(const DistMatrix& a) {
  const std::size_t n = a.rows();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const std::vector<PlainEdge> edges = edges_of(a);
  DistMatrix out = DistMatrix::square(n, kPosInf);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::int64_t> d(n, kInf);
    d[s] = 0;
    for (std::size_t round = 0; round + 1 < n; ++round)
      for (const PlainEdge& e : edges)
        if (d[e.u] != kInf && d[e.u] + e.w < d[e.v]) d[e.v] = d[e.u] + e.w;
    std::vector<bool> neg(n, false);
    for (const PlainEdge& e : edges)
      if (d[e.u] != kInf && d[e.u] + e.w < d[e.v]) neg[e.v] = true;
    // Everything reachable from a still-relaxable vertex is unbounded.
    for (std::size_t round = 0; round < n; ++round)
      for (const PlainEdge& e : edges)
        if (neg[e.u]) neg[e.v] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (neg[v]) {
        out(s, v) = kNegInf;
      } else if (d[v] != kInf) {
        out(s, v) = d[v];
      }
    }
  }
  return out;
}

std::vector<DistMatrix> hop_layers(const DistMatrix& a, std::size_t max_hops) {
  const std::size_t n = a.rows();
  const std::vector<PlainEdge> edges = edges_of(a);
  std::vector<DistMatrix> layers;
  DistMatrix cur = DistMatrix::square(n, kPosInf);
  for (std::size_t i = 0; i < n; ++i) cur(i, i) = 0;
  layers.push_back(cur);
  for (std::size_t l = 1; l <= max_hops; ++l) {
    DistMatrix next = cur;
    for (std::size_t s = 0; s < n; ++s)
      for (const PlainEdge& e : edges)
        if (cur(s, e.u) != kPosInf) {
          const ExtInt cand = cur(s, e.u).value() + e.w;
          if (cand < next(s, e.v)) next(s, e.v) = cand;
        }
    cur = std::move(next);
    layers.push_back(cur);
  }
  return layers;
}

std::vector<std::vector<std::size_t>> min_optimal_hops(const DistMatrix& a,
                                                       const DistMatrix& star) {
  const std::size_t n = a.rows();
  const auto layers = hop_layers(a, n);
  std::vector<std::vector<std::size_t>> hops(
      n, std::vector<std::size_t>(n, std::numeric_limits<std::size_t>::max()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!star(i, j).is_finite()) continue;
      for (std::size_t l = 0; l < layers.size(); ++l)
        if (layers[l](i, j) == star(i, j)) {
          hops[i][j] = l;
          break;
        }
    }
  return hops;
}

}  // namespace apsp::testing
