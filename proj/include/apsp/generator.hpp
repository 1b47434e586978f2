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

#ifndef APSP_GENERATOR_HPP_
#define APSP_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>

#include "apsp/graph.hpp"
#include "apsp/products.hpp"

namespace apsp {

// SplitMix64 (Steele, Lea, Flood 2014). Fixed so generated instances are
// reproducible across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

// Every ordered pair (i, j), i != j, gets an edge with probability density,
// weight uniform on {-1,0,1}. Pairs are visited row-major; each pair draws
// one coin and, when present, one weight.
SignedGraph gen_random_graph(std::size_t n, double density, std::uint64_t seed);

// Random valid restricted instance: a has entries in [-value_range,
// value_range] plus occasional infinities, b is independently -inf/+inf, and
// target is the (min,max) product lowered by a random nonnegative amount
// (sometimes to a value of the same row of a, sometimes to -inf).
RestrictedInstance gen_restricted_instance(std::size_t n, std::uint64_t seed,
                                           std::int64_t value_range = 8);

}  // namespace apsp

#endif  // APSP_GENERATOR_HPP_
