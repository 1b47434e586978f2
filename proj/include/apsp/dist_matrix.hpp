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

#ifndef APSP_DIST_MATRIX_HPP_
#define APSP_DIST_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "apsp/ext_int.hpp"

namespace apsp {

// Dense row-major matrix of extended integers.
class DistMatrix {
 public:
  DistMatrix() = default;
  DistMatrix(std::size_t rows, std::size_t cols, ExtInt fill = kPosInf);

  static DistMatrix square(std::size_t n, ExtInt fill = kPosInf) {
    return DistMatrix(n, n, fill);
  }
  // Rows must all have the same length.
  static DistMatrix from_rows(
      std::initializer_list<std::initializer_list<ExtInt>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  ExtInt operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  ExtInt& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  std::span<const ExtInt> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<ExtInt> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const ExtInt> entries() const { return data_; }

  bool operator==(const DistMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtInt> data_;
};

// Applies f to every entry.
template <typename F>
DistMatrix transform(const DistMatrix& m, F f) {
  DistMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto src = m.row(i);
    auto dst = out.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) dst[j] = f(src[j]);
  }
  return out;
}

void require_square(const DistMatrix& m, const char* what);
void require_same_square(const DistMatrix& a, const DistMatrix& b,
                         const char* what);

std::ostream& operator<<(std::ostream& os, const DistMatrix& m);

}  // namespace apsp

#endif  // APSP_DIST_MATRIX_HPP_
