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

#include "apsp/generator.hpp"

#include <string>

#include "apsp/errors.hpp"

namespace apsp {

SignedGraph gen_random_graph(std::size_t n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw InvalidInput("density must lie in [0, 1], got " + std::to_string(density));
  }
  SplitMix64 rng(seed);
  SignedGraph g;
  g.n = n;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!rng.chance(density)) continue;
      g.edges.push_back({i, j, static_cast<int>(rng.below(3)) - 1});
    }
  }
  return g;
}

RestrictedInstance gen_restricted_instance(std::size_t n, std::uint64_t seed,
                                           std::int64_t value_range) {
  if (value_range < 0) throw InvalidInput("value_range must be >= 0");
  SplitMix64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * value_range + 1);
  RestrictedInstance inst{DistMatrix::square(n), DistMatrix::square(n),
                          DistMatrix::square(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t roll = rng.below(20);
      if (roll == 0) {
        inst.a(i, j) = kPosInf;
      } else if (roll == 1) {
        inst.a(i, j) = kNegInf;
      } else {
        inst.a(i, j) = static_cast<std::int64_t>(rng.below(span)) - value_range;
      }
      inst.b(i, j) = rng.chance(0.5) ? kNegInf : kPosInf;
    }
  }
  const DistMatrix product = minmax_product(inst.a, inst.b);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const ExtInt p = product(i, j);
      ExtInt t = p;
      switch (rng.below(5)) {
        case 0:
        case 1:
          break;  // exact target
        case 2: {
          const ExtInt candidate = inst.a(i, rng.below(n));
          if (candidate <= p) t = candidate;
          break;
        }
        case 3:
          if (p.is_finite()) {
            t = p.value() - 1 - static_cast<std::int64_t>(rng.below(3));
          } else if (p.is_pos_inf()) {
            t = static_cast<std::int64_t>(rng.below(span)) - value_range;
          }
          break;
        default:
          t = kNegInf;
          break;
      }
      inst.target(i, j) = t;
    }
  }
  return inst;
}

}  // namespace apsp
