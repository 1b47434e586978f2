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

#ifndef APSP_BENCH_HPP_
#define APSP_BENCH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apsp/bit_matrix.hpp"
#include "apsp/dist_matrix.hpp"

namespace apsp {

// "<sum of finite entries mod 2^64>:<count of -inf>:<count of +inf>".
// A bit matrix sums its ones and has no infinities.
std::string checksum(const DistMatrix& m);
std::string checksum(const BitMatrix& m);

inline const std::vector<std::string>& bench_kernel_names() {
  static const std::vector<std::string> names = {
      "minmax", "tminmax-naive", "tminmax-restricted", "apsp-oracle",
      "apsp-reduction"};
  return names;
}

struct BenchConfig {
  std::vector<std::size_t> sizes = {128, 256, 512};
  std::vector<std::string> kernels = {"tminmax-naive", "tminmax-restricted"};
  double threshold_exponent = 0.5;
  std::uint64_t seed = 1;
  int repeats = 1;
  std::int64_t value_range = 8;  // product instances
  double density = 0.3;          // apsp instances
};

struct BenchRow {
  std::string kernel;
  std::size_t n = 0;
  double t = 0.0;
  std::int64_t wall_ns = 0;
  std::string checksum;
  // Wall time over the reference kernel for the same product at the same n:
  // tminmax-restricted / tminmax-naive and apsp-reduction / apsp-oracle.
  std::optional<double> ratio;
};

// Times every requested kernel at every size, best of `repeats` runs. Throws
// InvalidInput on an unknown kernel name.
std::vector<BenchRow> run_bench(const BenchConfig& config);

// Header: kernel,n,t,wall_ns,checksum,ratio
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace apsp

#endif  // APSP_BENCH_HPP_
