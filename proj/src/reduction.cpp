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

#include "apsp/reduction.hpp"

#include <bit>
#include <string>

#include "apsp/errors.hpp"
#include "apsp/kernels.hpp"
#include "apsp/products.hpp"

namespace apsp {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::nanoseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

void require_reduction_input(const DistMatrix& a) {
  require_square(a, "apsp_minus_zero_one");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const ExtInt x = a(i, j);
      const bool ok = i == j ? (x == ExtInt(0) || x == ExtInt(-1))
                             : (x.is_pos_inf() || (x >= ExtInt(-1) && x <= ExtInt(1)));
      if (!ok) {
        throw InvalidInput("apsp_minus_zero_one: entry (" + std::to_string(i) + "," +
                           std::to_string(j) + ") = " + x.to_string() +
                           " outside the supported domain");
      }
    }
  }
}

void fail_if(bool failed, const char* what, std::uint64_t delta) {
  if (failed) {
    throw VerificationFailure(std::string("apsp_minus_zero_one: ") + what +
                              " failed at delta=" + std::to_string(delta));
  }
}

DistMatrix solve_level(const DistMatrix& a, std::uint64_t delta,
                       const ReductionOptions& options, RecursionTrace& trace) {
  const std::size_t level = trace.levels.size();
  trace.levels.emplace_back();
  trace.levels.back().n = a.rows();
  trace.levels.back().delta = delta;
  auto record = [&]() -> LevelTrace& { return trace.levels[level]; };

  std::optional<DistMatrix> oracle;
  if (options.verify) {
    LevelChecks checks;
    checks.entry_regular = is_delta_regular(a, delta);
    record().checks = checks;
    fail_if(!checks.entry_regular, "entry regularity", delta);
    oracle = oracle_apsp(a);
  }

  if (delta == 1) {
    auto start = Clock::now();
    DistMatrix star = one_regular_apsp(a);
    record().assembly = since(start);
    if (options.verify) {
      record().checks->output_exact = star == *oracle;
      fail_if(!record().checks->output_exact, "base-case output", delta);
    }
    return star;
  }

  auto start = Clock::now();
  const DistMatrix c = canonical_adjacency(a);
  record().canonical = since(start);

  start = Clock::now();
  const DistMatrix t = two_hop_target(c);
  record().two_hop = since(start);

  const std::uint64_t half_delta = delta / 2 + delta % 2;
  start = Clock::now();
  const DistMatrix half_star = solve_level(t, half_delta, options, trace);
  record().recursion = since(start);

  start = Clock::now();
  const ParityMasks masks = parity_masks(c);
  const ParityBits bits =
      parity_products(half_star, masks, options.threshold_exponent, false);
  record().products = since(start);

  start = Clock::now();
  DistMatrix star = assemble_distances(half_star, bits);
  record().assembly = since(start);

  if (options.verify) {
    LevelChecks& checks = *record().checks;
    checks.descent_regular = is_delta_regular(t, half_delta);
    const DistMatrix halved = transform(*oracle, ext_ceil_half);
    checks.halving_law = oracle_apsp(t) == halved && half_star == halved;
    const DistMatrix minus_one = transform(half_star, ext_decrement);
    checks.precondition = target_below_minmax(half_star, masks.minus, half_star) &&
                          target_below_minmax(half_star, masks.plus, minus_one);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const ExtInt want = (*oracle)(i, j);
        if (!half_star(i, j).is_finite() || !want.is_finite()) continue;
        const bool odd = want.value() % 2 != 0;
        const bool flagged = bits.plus.get(i, j) || bits.minus.get(i, j);
        if (odd != flagged) checks.parity_law = false;
        if (odd && !flagged) checks.zero_edge_parity = false;
      }
    }
    checks.output_exact = star == *oracle;
    fail_if(!checks.descent_regular, "regularity descent", delta);
    fail_if(!checks.halving_law, "halving law", delta);
    fail_if(!checks.precondition, "product precondition", delta);
    fail_if(!checks.parity_law, "parity law", delta);
    fail_if(!checks.output_exact, "level output", delta);
  }
  return star;
}

}  // namespace

DistMatrix two_hop_target(const DistMatrix& c) {
  DistMatrix t = transform(bounded_hop_closure(c, 2), ext_ceil_half);
  for (ExtInt x : t.entries()) {
    if (!x.is_pos_inf() && (x < ExtInt(-1) || x > ExtInt(1))) {
      throw VerificationFailure("two_hop_target: halved entry " + x.to_string() +
                                " outside {-1,0,1,+inf}");
    }
  }
  return t;
}

ParityMasks parity_masks(const DistMatrix& c) {
  auto mask = [&](ExtInt edge) {
    return transform(c, [edge](ExtInt x) { return x == edge ? kNegInf : kPosInf; });
  };
  return {mask(ExtInt(1)), mask(ExtInt(-1))};
}

ParityBits parity_products(const DistMatrix& half_star, const ParityMasks& masks,
                           double threshold_exponent, bool verify) {
  const DistMatrix minus_one = transform(half_star, ext_decrement);
  const RestrictedOptions opts{.threshold_exponent = threshold_exponent,
                               .verify = verify};
  return {restricted_target_minmax(half_star, masks.plus, minus_one, opts),
          restricted_target_minmax(half_star, masks.minus, half_star, opts)};
}

DistMatrix assemble_distances(const DistMatrix& half_star, const ParityBits& bits) {
  DistMatrix out(half_star.rows(), half_star.cols());
  for (std::size_t i = 0; i < half_star.rows(); ++i) {
    for (std::size_t j = 0; j < half_star.cols(); ++j) {
      const ExtInt t = half_star(i, j);
      if (!t.is_finite()) {
        out(i, j) = t;
      } else if (bits.plus.get(i, j) || bits.minus.get(i, j)) {
        out(i, j) = 2 * t.value() - 1;
      } else {
        out(i, j) = 2 * t.value();
      }
    }
  }
  return out;
}

std::size_t expected_depth(std::uint64_t delta) {
  if (delta < 1) throw InvalidInput("expected_depth: delta must be >= 1");
  return static_cast<std::size_t>(std::bit_width(delta - 1)) + 1;
}

DistMatrix apsp_minus_zero_one(const DistMatrix& a, std::uint64_t delta,
                               const ReductionOptions& options,
                               RecursionTrace* trace) {
  if (delta < 1) throw InvalidInput("apsp_minus_zero_one: delta must be >= 1");
  require_reduction_input(a);
  RecursionTrace local;
  RecursionTrace& t = trace != nullptr ? *trace : local;
  t.levels.clear();
  return solve_level(a, delta, options, t);
}

DistMatrix solve_graph(const SignedGraph& g, const ReductionOptions& options,
                       RecursionTrace* trace) {
  const DistMatrix a = adjacency_from_graph(g);
  const std::uint64_t delta = std::max<std::uint64_t>(1, std::uint64_t{g.n} * g.n);
  return apsp_minus_zero_one(a, delta, options, trace);
}

}  // namespace apsp
