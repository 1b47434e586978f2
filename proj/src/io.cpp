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

#include "apsp/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/errors.hpp"

namespace apsp::io {
namespace {

// Yields whitespace-split tokens of non-comment, non-blank lines.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // False at end of input.
  bool next(std::vector<std::string_view>& tokens) {
    tokens.clear();
    while (std::getline(in_, line_)) {
      ++line_no_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      std::string_view rest = line_;
      const auto first = rest.find_first_not_of(" \t");
      if (first == std::string_view::npos || rest[first] == '#') continue;
      while (!rest.empty()) {
        const auto b = rest.find_first_not_of(" \t");
        if (b == std::string_view::npos) break;
        rest.remove_prefix(b);
        const auto e = rest.find_first_of(" \t");
        tokens.push_back(rest.substr(0, e));
        if (e == std::string_view::npos) break;
        rest.remove_prefix(e);
      }
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::string line_;
  std::size_t line_no_ = 0;
};

template <typename Int>
bool parse_int(std::string_view token, Int& value) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), last, value);
  return !token.empty() && ec == std::errc() && ptr == last;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return in;
}

}  // namespace

SignedGraph read_edge_list(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw ParseError("empty edge list: missing \"n m\" header");
  std::size_t n = 0, m = 0;
  if (tok.size() != 2 || !parse_int(tok[0], n) || !parse_int(tok[1], m)) {
    reader.fail("expected header \"n m\"");
  }
  SignedGraph g;
  g.n = n;
  g.edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    if (!reader.next(tok)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " +
                       std::to_string(e));
    }
    long long u = 0, v = 0, w = 0;
    if (tok.size() != 3 || !parse_int(tok[0], u) || !parse_int(tok[1], v) ||
        !parse_int(tok[2], w)) {
      reader.fail("expected \"u v w\"");
    }
    const std::string where = "line " + std::to_string(reader.line()) + ": ";
    if (w < -1 || w > 1) {
      throw InvalidInput(where + "weight " + std::to_string(w) + " not in {-1,0,1}");
    }
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw InvalidInput(where + "endpoint out of range [0, " + std::to_string(n) + ")");
    }
    g.edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v),
                       static_cast<int>(w)});
  }
  if (reader.next(tok)) reader.fail("unexpected data after the last edge");
  return g;
}

void write_edge_list(std::ostream& out, const SignedGraph& g) {
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const Edge& e : g.edges) {
    out << e.source << '\t' << e.target << '\t' << e.weight << '\n';
  }
}

DistMatrix read_matrix(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw ParseError("empty matrix file: missing \"r c\" header");
  std::size_t rows = 0, cols = 0;
  if (tok.size() != 2 || !parse_int(tok[0], rows) || !parse_int(tok[1], cols)) {
    reader.fail("expected header \"r c\"");
  }
  DistMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!reader.next(tok)) {
      throw ParseError("expected " + std::to_string(rows) + " rows, found " +
                       std::to_string(i));
    }
    if (tok.size() != cols) {
      reader.fail("expected " + std::to_string(cols) + " entries, found " +
                  std::to_string(tok.size()));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const auto x = ExtInt::parse(tok[j]);
      if (!x) reader.fail("bad entry \"" + std::string(tok[j]) + "\"");
      m(i, j) = *x;
    }
  }
  if (reader.next(tok)) reader.fail("unexpected data after the last row");
  return m;
}

void write_matrix(std::ostream& out, const DistMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << m;
}

void write_matrix(std::ostream& out, const BitMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n' << m;
}

SignedGraph read_edge_list_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_edge_list(in);
}

DistMatrix read_matrix_file(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return read_matrix(in);
}

}  // namespace apsp::io
