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

#ifndef APSP_BIT_MATRIX_HPP_
#define APSP_BIT_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace apsp {

// Dense 0/1 matrix with rows packed into 64-bit words. Bits past cols() in
// the last word of each row are always zero.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return words_per_row_; }
  bool is_square() const { return rows_ == cols_; }

  bool get(std::size_t i, std::size_t j) const {
    return (words_[i * words_per_row_ + j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t i, std::size_t j, bool value = true) {
    Word& w = words_[i * words_per_row_ + j / kWordBits];
    const Word mask = Word{1} << (j % kWordBits);
    w = value ? (w | mask) : (w & ~mask);
  }

  std::span<const Word> row_words(std::size_t i) const {
    return {words_.data() + i * words_per_row_, words_per_row_};
  }
  std::span<Word> row_words(std::size_t i) {
    return {words_.data() + i * words_per_row_, words_per_row_};
  }

  // Number of set bits.
  std::size_t count() const;
  bool any_in_row(std::size_t i) const;

  bool operator==(const BitMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> words_;
};

std::ostream& operator<<(std::ostream& os, const BitMatrix& m);

}  // namespace apsp

#endif  // APSP_BIT_MATRIX_HPP_
