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

#include "apsp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <ostream>

#include "apsp/errors.hpp"
#include "apsp/generator.hpp"
#include "apsp/graph.hpp"
#include "apsp/products.hpp"
#include "apsp/reduction.hpp"

namespace apsp {
namespace {

std::int64_t time_best(int repeats, const std::function<std::string()>& body,
                       std::string& sum) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int r = 0; r < std::max(repeats, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    sum = body();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    best = std::min<std::int64_t>(best, ns);
  }
  return best;
}

const char* reference_of(const std::string& kernel) {
  if (kernel == "tminmax-restricted") return "tminmax-naive";
  if (kernel == "apsp-reduction") return "apsp-oracle";
  return nullptr;
}

}  // namespace

std::string checksum(const DistMatrix& m) {
  std::uint64_t sum = 0;
  std::size_t neg = 0, pos = 0;
  for (ExtInt x : m.entries()) {
    if (x.is_neg_inf()) {
      ++neg;
    } else if (x.is_pos_inf()) {
      ++pos;
    } else {
      sum += static_cast<std::uint64_t>(x.value());
    }
  }
  return std::to_string(sum) + ":" + std::to_string(neg) + ":" + std::to_string(pos);
}

std::string checksum(const BitMatrix& m) {
  return std::to_string(m.count()) + ":0:0";
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  const auto& known = bench_kernel_names();
  for (const std::string& k : config.kernels) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      throw InvalidInput("unknown bench kernel \"" + k + "\"");
    }
  }
  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    const RestrictedInstance inst =
        gen_restricted_instance(n, config.seed, config.value_range);
    const SignedGraph graph = gen_random_graph(n, config.density, config.seed);
    const DistMatrix adjacency = adjacency_from_graph(graph);
    const std::uint64_t delta = std::max<std::uint64_t>(1, std::uint64_t{n} * n);

    std::map<std::string, std::function<std::string()>> bodies = {
        {"minmax", [&] { return checksum(minmax_product(inst.a, inst.b)); }},
        {"tminmax-naive",
         [&] { return checksum(target_minmax_naive(inst.a, inst.b, inst.target)); }},
        {"tminmax-restricted",
         [&] {
           return checksum(restricted_target_minmax(
               inst, RestrictedOptions{.threshold_exponent = config.threshold_exponent}));
         }},
        {"apsp-oracle", [&] { return checksum(oracle_apsp(adjacency)); }},
        {"apsp-reduction",
         [&] {
           return checksum(apsp_minus_zero_one(
               adjacency, delta,
               ReductionOptions{.threshold_exponent = config.threshold_exponent}));
         }},
    };

    const std::size_t first = rows.size();
    for (const std::string& kernel : config.kernels) {
      BenchRow row;
      row.kernel = kernel;
      row.n = n;
      row.t = config.threshold_exponent;
      row.wall_ns = time_best(config.repeats, bodies.at(kernel), row.checksum);
      rows.push_back(std::move(row));
    }
    for (std::size_t r = first; r < rows.size(); ++r) {
      const char* ref = reference_of(rows[r].kernel);
      if (ref == nullptr) continue;
      for (std::size_t q = first; q < rows.size(); ++q) {
        if (rows[q].kernel == ref && rows[q].wall_ns > 0) {
          rows[r].ratio = static_cast<double>(rows[r].wall_ns) /
                          static_cast<double>(rows[q].wall_ns);
        }
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "kernel,n,t,wall_ns,checksum,ratio\n";
  for (const BenchRow& row : rows) {
    out << row.kernel << ',' << row.n << ',' << row.t << ',' << row.wall_ns << ','
        << row.checksum << ',';
    if (row.ratio) out << *row.ratio;
    out << '\n';
  }
}

}  // namespace apsp
