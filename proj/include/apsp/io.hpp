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

#ifndef APSP_IO_HPP_
#define APSP_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include "apsp/bit_matrix.hpp"
#include "apsp/dist_matrix.hpp"
#include "apsp/graph.hpp"

namespace apsp::io {

// Edge lists: '#' starts a comment line, blank lines are ignored. The first
// data line is "n m", followed by m lines "u<TAB>v<TAB>w" with 0-based
// endpoints and w in {-1,0,1}.
//
// Malformed text throws ParseError; a weight outside {-1,0,1} or an endpoint
// outside [0, n) throws InvalidInput. Both messages name the line number.
SignedGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const SignedGraph& g);

// Matrices: "r c", then r lines of c whitespace-separated tokens. Finite
// entries are decimal; infinities are "+inf" / "-inf" ("inf" reads as
// "+inf"). Bit matrices use 0/1 tokens in the same frame.
DistMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const DistMatrix& m);
void write_matrix(std::ostream& out, const BitMatrix& m);

SignedGraph read_edge_list_file(const std::filesystem::path& path);
DistMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace apsp::io

#endif  // APSP_IO_HPP_
