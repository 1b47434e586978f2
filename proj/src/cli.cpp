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

#include "apsp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "apsp/bench.hpp"
#include "apsp/errors.hpp"
#include "apsp/generator.hpp"
#include "apsp/graph.hpp"
#include "apsp/io.hpp"
#include "apsp/parallel.hpp"
#include "apsp/products.hpp"
#include "apsp/reduction.hpp"

namespace apsp::cli {
namespace {

constexpr std::size_t kMaxReportedDiffs = 10;

// Writes through `write` to config.output, or to `out` when no path is set.
void emit(const RunConfig& config, std::ostream& out,
          const std::function<void(std::ostream&)>& write) {
  if (config.output.empty() || config.output == "-") {
    write(out);
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw InvalidInput("cannot open " + config.output + " for writing");
  write(file);
  if (!file) throw InvalidInput("failed writing " + config.output);
}

std::size_t resolve_threads(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("APSP_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

ReductionOptions reduction_options(const RunConfig& config) {
  return {.threshold_exponent = config.threshold, .verify = config.verify_mode};
}

void print_trace(std::ostream& err, const RecursionTrace& trace) {
  err << "level,n,delta,canonical_ns,two_hop_ns,recursion_ns,products_ns,"
         "assembly_ns,checks\n";
  for (std::size_t l = 0; l < trace.levels.size(); ++l) {
    const LevelTrace& lv = trace.levels[l];
    err << l << ',' << lv.n << ',' << lv.delta << ',' << lv.canonical.count() << ','
        << lv.two_hop.count() << ',' << lv.recursion.count() << ','
        << lv.products.count() << ',' << lv.assembly.count() << ','
        << (lv.checks ? (lv.checks->all() ? "pass" : "FAIL") : "off") << '\n';
  }
}

int do_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const SignedGraph g = io::read_edge_list_file(config.input);
  DistMatrix star;
  if (config.algorithm == "oracle") {
    star = oracle_apsp(adjacency_from_graph(g));
  } else if (config.algorithm == "reduction") {
    RecursionTrace trace;
    star = solve_graph(g, reduction_options(config), &trace);
    if (config.trace) print_trace(err, trace);
  } else {
    throw InvalidInput("unknown algorithm \"" + config.algorithm + "\"");
  }
  emit(config, out, [&](std::ostream& os) { io::write_matrix(os, star); });
  return kExitOk;
}

int do_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  std::vector<std::pair<std::string, SignedGraph>> instances;
  if (!config.input.empty()) {
    instances.emplace_back(config.input, io::read_edge_list_file(config.input));
  } else {
    for (std::size_t k = 0; k < config.count; ++k) {
      const std::uint64_t seed = config.seed + k;
      instances.emplace_back("seed " + std::to_string(seed),
                             gen_random_graph(config.n, config.density, seed));
    }
  }
  std::size_t mismatched = 0;
  std::size_t reported = 0;
  for (const auto& [name, g] : instances) {
    const DistMatrix want = oracle_apsp(adjacency_from_graph(g));
    const DistMatrix got = solve_graph(g, reduction_options(config));
    if (got == want) continue;
    ++mismatched;
    for (std::size_t i = 0; i < g.n; ++i) {
      for (std::size_t j = 0; j < g.n; ++j) {
        if (got(i, j) == want(i, j) || reported >= kMaxReportedDiffs) continue;
        if (reported == 0) out << "instance,i,j,got,want\n";
        out << name << ',' << i << ',' << j << ',' << got(i, j) << ',' << want(i, j)
            << '\n';
        ++reported;
      }
    }
  }
  if (mismatched > 0) {
    out << "MISMATCH: " << mismatched << " of " << instances.size()
        << " instance(s) differ from the oracle\n";
    return kExitMismatch;
  }
  out << "ok: " << instances.size() << " instance(s) match the oracle\n";
  return kExitOk;
}

int do_product(const RunConfig& config, std::ostream& out, std::ostream&) {
  const DistMatrix a = io::read_matrix_file(config.a_path);
  const DistMatrix b = io::read_matrix_file(config.b_path);
  if (config.kernel == "minmax") {
    const DistMatrix c = minmax_product(a, b);
    emit(config, out, [&](std::ostream& os) { io::write_matrix(os, c); });
    return kExitOk;
  }
  if (config.target_path.empty()) {
    throw InvalidInput("kernel " + config.kernel + " needs --target");
  }
  const DistMatrix target = io::read_matrix_file(config.target_path);
  BitMatrix c;
  if (config.kernel == "tminmax-naive") {
    c = target_minmax_naive(a, b, target);
  } else if (config.kernel == "tminmax-restricted") {
    c = restricted_target_minmax(
        a, b, target,
        RestrictedOptions{.threshold_exponent = config.threshold,
                          .verify = config.verify_mode});
  } else {
    throw InvalidInput("unknown kernel \"" + config.kernel + "\"");
  }
  emit(config, out, [&](std::ostream& os) { io::write_matrix(os, c); });
  return kExitOk;
}

int do_gen(const RunConfig& config, std::ostream& out) {
  const SignedGraph g = gen_random_graph(config.n, config.density, config.seed);
  emit(config, out, [&](std::ostream& os) { io::write_edge_list(os, g); });
  return kExitOk;
}

int do_bench(const RunConfig& config, std::ostream& out) {
  BenchConfig bc;
  bc.sizes = config.sizes;
  bc.kernels = config.kernels;
  bc.threshold_exponent = config.threshold;
  bc.seed = config.seed;
  bc.repeats = config.repeats;
  bc.value_range = config.value_range;
  bc.density = config.density;
  const std::vector<BenchRow> rows = run_bench(bc);
  emit(config, out, [&](std::ostream& os) { write_bench_csv(os, rows); });
  return kExitOk;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!(config.threshold >= 0.0 && config.threshold <= 1.0)) {
      throw InvalidInput("--threshold must lie in [0, 1]");
    }
    if (!(config.density >= 0.0 && config.density <= 1.0)) {
      throw InvalidInput("--density must lie in [0, 1]");
    }
    set_thread_count(resolve_threads(config.threads));
    switch (config.command) {
      case Command::kSolve:
        return do_solve(config, out, err);
      case Command::kVerify:
        return do_verify(config, out, err);
      case Command::kProduct:
        return do_product(config, out, err);
      case Command::kGen:
        return do_gen(config, out);
      case Command::kBench:
        return do_bench(config, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig config;
  CLI::App app{"Exact all-pairs shortest paths for {-1,0,1}-weighted digraphs"};
  app.name(args.empty() ? "apsp" : args.front());
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", config.threads,
                 "Worker-count hint (falls back to APSP_THREADS, then 1)");

  auto threshold_opt = [&](CLI::App* sub) {
    sub->add_option("--threshold", config.threshold,
                    "Heavy-light exponent t in [0,1]")
        ->check(CLI::Range(0.0, 1.0));
  };
  auto output_opt = [&](CLI::App* sub) {
    sub->add_option("-o,--output", config.output, "Output file (default stdout)");
  };

  CLI::App* solve = app.add_subcommand("solve", "Compute A* for an edge-list graph");
  solve->add_option("-i,--input", config.input, "Edge-list file")->required();
  solve->add_option("--algorithm", config.algorithm, "reduction | oracle")
      ->check(CLI::IsMember({"reduction", "oracle"}));
  solve->add_flag("--verify-mode", config.verify_mode, "Per-level assertions");
  solve->add_flag("--trace", config.trace, "Print the recursion trace to stderr");
  threshold_opt(solve);
  output_opt(solve);

  CLI::App* verify =
      app.add_subcommand("verify", "Compare the reduction against the oracle");
  verify->add_option("-i,--input", config.input, "Edge-list file");
  verify->add_option("-n,--n", config.n, "Vertices per generated graph");
  verify->add_option("--density", config.density, "Edge probability");
  verify->add_option("--seed", config.seed, "First seed");
  verify->add_option("--count", config.count, "Generated graphs (seeds seed..)");
  verify->add_flag("--verify-mode", config.verify_mode, "Per-level assertions");
  threshold_opt(verify);

  CLI::App* product = app.add_subcommand("product", "Run one matrix-product kernel");
  product->add_option("--kernel", config.kernel,
                      "minmax | tminmax-naive | tminmax-restricted")
      ->check(CLI::IsMember({"minmax", "tminmax-naive", "tminmax-restricted"}));
  product->add_option("-a,--a", config.a_path, "Matrix A")->required();
  product->add_option("-b,--b", config.b_path, "Matrix B")->required();
  product->add_option("-t,--target", config.target_path, "Target matrix T");
  product->add_flag("--verify-mode", config.verify_mode,
                    "Check the restricted-instance precondition");
  threshold_opt(product);
  output_opt(product);

  CLI::App* gen = app.add_subcommand("gen", "Write a random edge list");
  gen->add_option("-n,--n", config.n, "Vertices")->check(CLI::PositiveNumber);
  gen->add_option("--density", config.density, "Edge probability");
  gen->add_option("--seed", config.seed, "Seed");
  output_opt(gen);

  CLI::App* bench = app.add_subcommand("bench", "Time kernels over a size sweep");
  bench->add_option("--sizes", config.sizes, "Instance sizes")->delimiter(',');
  bench->add_option("--kernels", config.kernels,
                    "Kernels: minmax, tminmax-naive, tminmax-restricted, "
                    "apsp-oracle, apsp-reduction")
      ->delimiter(',');
  bench->add_option("--seed", config.seed, "Seed");
  bench->add_option("--repeats", config.repeats, "Best-of repeats")
      ->check(CLI::PositiveNumber);
  bench->add_option("--value-range", config.value_range,
                    "Product instances draw A from [-r, r]");
  bench->add_option("--density", config.density, "APSP instance edge probability");
  threshold_opt(bench);
  output_opt(bench);

  try {
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  }

  if (solve->parsed()) {
    config.command = Command::kSolve;
  } else if (verify->parsed()) {
    config.command = Command::kVerify;
  } else if (product->parsed()) {
    config.command = Command::kProduct;
  } else if (gen->parsed()) {
    config.command = Command::kGen;
  } else {
    config.command = Command::kBench;
  }
  return run(config, out, err);
}

}  // namespace apsp::cli
