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

#include "apsp/graph.hpp"

#include <algorithm>
#include <string>

#include "apsp/errors.hpp"
#include "apsp/kernels.hpp"

namespace apsp {

void validate(const SignedGraph& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const Edge& edge = g.edges[e];
    if (edge.source >= g.n || edge.target >= g.n) {
      throw InvalidInput("edge " + std::to_string(e) + ": endpoint out of range [0, " +
                         std::to_string(g.n) + ")");
    }
    if (edge.weight < -1 || edge.weight > 1) {
      throw InvalidInput("edge " + std::to_string(e) + ": weight " +
                         std::to_string(edge.weight) + " not in {-1,0,1}");
    }
  }
}

DistMatrix adjacency_from_graph(const SignedGraph& g) {
  validate(g);
  DistMatrix a = DistMatrix::square(g.n, kPosInf);
  for (std::size_t i = 0; i < g.n; ++i) a(i, i) = 0;
  for (const Edge& e : g.edges) {
    ExtInt& slot = a(e.source, e.target);
    slot = std::min(slot, ExtInt(e.weight));
  }
  return a;
}

DistMatrix oracle_apsp(const DistMatrix& a) {
  require_square(a, "oracle_apsp");
  const std::size_t n = a.rows();
  DistMatrix d = a;
  for (std::size_t i = 0; i < n; ++i) d(i, i) = std::min(d(i, i), ExtInt(0));
  ExtInt::Rep heaviest = 1;
  for (ExtInt x : a.entries()) {
    if (x.is_neg_inf()) throw InvalidInput("oracle_apsp: -inf edge weight");
    if (x.is_finite()) heaviest = std::max(heaviest, x.value() < 0 ? -x.value() : x.value());
  }
  // Walks through negative cycles can drive Floyd-Warshall values
  // exponentially low. A value below -(n * heaviest) already implies a
  // negative cycle on the walk, so clamping there keeps the -inf
  // classification intact.
  const ExtInt::Rep floor = -static_cast<ExtInt::Rep>(n) * heaviest - 1;
  for (std::size_t k = 0; k < n; ++k) {
    auto dk = d.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      const ExtInt dik = d(i, k);
      if (dik.is_pos_inf()) continue;
      auto di = d.row(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (dk[j].is_pos_inf()) continue;
        const ExtInt cand(std::max(dik.value() + dk[j].value(), floor));
        if (cand < di[j]) di[j] = cand;
      }
    }
  }
  DistMatrix out = d;
  for (std::size_t k = 0; k < n; ++k) {
    if (d(k, k) >= ExtInt(0)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, k).is_pos_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d(k, j).is_pos_inf()) out(i, j) = kNegInf;
      }
    }
  }
  return out;
}

bool is_delta_regular(const DistMatrix& a, std::uint64_t delta) {
  require_square(a, "is_delta_regular");
  if (delta < 1) throw InvalidInput("is_delta_regular: delta must be >= 1");
  const DistMatrix star = oracle_apsp(a);
  const DistMatrix bounded = bounded_hop_closure(a, delta);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (star(i, j).is_neg_inf()) {
        if (!(bounded(i, j) < ExtInt(0))) return false;
      } else if (star(i, j) != bounded(i, j)) {
        return false;
      }
    }
  }
  return true;
}

DistMatrix one_regular_apsp(const DistMatrix& a, bool verify) {
  require_square(a, "one_regular_apsp");
  if (verify && !is_delta_regular(a, 1)) {
    throw VerificationFailure("one_regular_apsp: input is not 1-regular");
  }
  const std::size_t n = a.rows();
  const BitMatrix reach = mask_of(a, [](ExtInt x) { return !x.is_pos_inf(); });
  // Reach restricted to columns that carry a negative self-loop.
  BitMatrix into_cycle(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) != ExtInt(-1)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (reach.get(i, k)) into_cycle.set(i, k);
    }
  }
  const BitMatrix through_cycle = bool_product(into_cycle, reach);
  DistMatrix out = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (through_cycle.get(i, j)) out(i, j) = kNegInf;
    }
  }
  return out;
}

}  // namespace apsp
