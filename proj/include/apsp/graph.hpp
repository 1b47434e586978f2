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

#ifndef APSP_GRAPH_HPP_
#define APSP_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "apsp/dist_matrix.hpp"

namespace apsp {

struct Edge {
  std::size_t source;
  std::size_t target;
  int weight;
  bool operator==(const Edge&) const = default;
};

// Directed multigraph with weights in {-1, 0, 1}.
struct SignedGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  bool operator==(const SignedGraph&) const = default;
};

// Throws InvalidInput on a weight outside {-1,0,1} or an endpoint >= n.
void validate(const SignedGraph& g);

// a[i][j] = lightest edge i->j or +inf; a[i][i] = min(0, lightest self-loop).
DistMatrix adjacency_from_graph(const SignedGraph& g);

// Ground-truth distances: Floyd-Warshall, then -inf for every pair that can
// route through a vertex k with d[k][k] < 0.
DistMatrix oracle_apsp(const DistMatrix& a);

// Adjacency of a canonical graph: every zero-weight run is folded into the
// adjacent nonzero edges, so a shortest path is either one edge or uses only
// +-1 edges, without gaining hops or changing any distance.
DistMatrix canonical_adjacency(const DistMatrix& a);

// True iff every pair with a* != -inf has a* == a^{<=delta} and every pair
// with a* == -inf has a^{<=delta} < 0.
bool is_delta_regular(const DistMatrix& a, std::uint64_t delta);

// Distances of a 1-regular matrix. a*[i][j] = -inf when some k with
// a[k][k] == -1 sits between finite a[i][k] and a[k][j]; otherwise a[i][j].
DistMatrix one_regular_apsp(const DistMatrix& a, bool verify = false);

}  // namespace apsp

#endif  // APSP_GRAPH_HPP_
