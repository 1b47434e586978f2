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

#ifndef APSP_CLI_HPP_
#define APSP_CLI_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace apsp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvalid = 3;

enum class Command { kSolve, kVerify, kProduct, kGen, kBench };

struct RunConfig {
  Command command = Command::kSolve;

  std::string input;   // edge list (solve, verify)
  std::string output;  // empty: write to the output stream
  std::string a_path, b_path, target_path;  // product operands

  std::string algorithm = "reduction";  // solve: reduction | oracle
  std::string kernel = "tminmax-restricted";  // product kernel
  double threshold = 0.5;
  std::uint64_t seed = 1;
  std::size_t n = 16;
  double density = 0.3;
  std::size_t count = 1;  // verify: generated instances
  bool verify_mode = false;
  bool trace = false;
  std::size_t threads = 0;  // 0: APSP_THREADS, else 1

  // bench
  std::vector<std::size_t> sizes = {128, 256, 512};
  std::vector<std::string> kernels = {"tminmax-naive", "tminmax-restricted"};
  int repeats = 1;
  std::int64_t value_range = 8;
};

// Executes a parsed configuration and returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (args[0] is the program name), then runs.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace apsp::cli

#endif  // APSP_CLI_HPP_
