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

#ifndef APSP_REDUCTION_HPP_
#define APSP_REDUCTION_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "apsp/bit_matrix.hpp"
#include "apsp/dist_matrix.hpp"
#include "apsp/graph.hpp"

namespace apsp {

// ceil(C^{<=2} / 2) entrywise. For a canonical C every entry lands in
// {-1, 0, 1, +inf}.
DistMatrix two_hop_target(const DistMatrix& c);

// plus[i][j] = -inf iff c[i][j] == +1; minus[i][j] = -inf iff c[i][j] == -1;
// +inf elsewhere.
struct ParityMasks {
  DistMatrix plus;
  DistMatrix minus;
};
ParityMasks parity_masks(const DistMatrix& c);

struct ParityBits {
  BitMatrix plus;
  BitMatrix minus;
};

// plus = T* (.)_M X+ with M = T* - 1, minus = T* (.)_{T*} X-, both through the
// restricted target product with the same threshold exponent.
ParityBits parity_products(const DistMatrix& half_star, const ParityMasks& masks,
                           double threshold_exponent, bool verify = false);

// a*[i][j] = t* if t* is infinite, 2t* - 1 if either parity bit is set,
// 2t* otherwise.
DistMatrix assemble_distances(const DistMatrix& half_star, const ParityBits& bits);

// Verification-mode results for one recursion level. Every flag is true on a
// correct run.
struct LevelChecks {
  bool entry_regular = true;     // A is delta-regular
  bool descent_regular = true;   // T is ceil(delta/2)-regular
  bool halving_law = true;       // T* == ceil(A*/2), via the oracle
  bool precondition = true;      // both products satisfy target <= minmax
  bool parity_law = true;        // for finite t*: (z+ | z-) <=> a* odd
  bool zero_edge_parity = true;  // odd finite a* => z+ | z-
  bool output_exact = true;      // assembled A* == oracle

  bool all() const {
    return entry_regular && descent_regular && halving_law && precondition &&
           parity_law && zero_edge_parity && output_exact;
  }
};

struct LevelTrace {
  std::size_t n = 0;
  std::uint64_t delta = 0;
  std::chrono::nanoseconds canonical{0};
  std::chrono::nanoseconds two_hop{0};
  std::chrono::nanoseconds recursion{0};
  std::chrono::nanoseconds products{0};
  std::chrono::nanoseconds assembly{0};
  std::optional<LevelChecks> checks;
};

// levels[0] is the top-level call; the last level is the delta == 1 base.
struct RecursionTrace {
  std::vector<LevelTrace> levels;
  std::size_t depth() const { return levels.size(); }
};

struct ReductionOptions {
  double threshold_exponent = 0.5;
  // Per-level O(n^3) assertions; failures throw VerificationFailure after the
  // level's checks are recorded in the trace.
  bool verify = false;
};

// Exact distances of a delta-regular matrix with off-diagonal entries in
// {-1,0,1,+inf} and diagonal in {-1,0}.
DistMatrix apsp_minus_zero_one(const DistMatrix& a, std::uint64_t delta,
                               const ReductionOptions& options = {},
                               RecursionTrace* trace = nullptr);

// Number of levels apsp_minus_zero_one visits for a given delta:
// ceil(log2 delta) + 1.
std::size_t expected_depth(std::uint64_t delta);

// Convenience: adjacency, then apsp_minus_zero_one with delta = n^2.
DistMatrix solve_graph(const SignedGraph& g, const ReductionOptions& options = {},
                       RecursionTrace* trace = nullptr);

}  // namespace apsp

#endif  // APSP_REDUCTION_HPP_
