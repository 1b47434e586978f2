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

#ifndef APSP_EXT_INT_HPP_
#define APSP_EXT_INT_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace apsp {

// Integer extended with -inf and +inf. The two infinities are stored as the
// extreme int64 values, so the built-in ordering of the representation is
// the ordering -inf < finite < +inf.
class ExtInt {
 public:
  using Rep = std::int64_t;

  constexpr ExtInt() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  constexpr ExtInt(Rep value) : rep_(value) {}

  static constexpr ExtInt pos_inf() { return ExtInt(kPosRep); }
  static constexpr ExtInt neg_inf() { return ExtInt(kNegRep); }

  constexpr bool is_finite() const { return rep_ != kPosRep && rep_ != kNegRep; }
  constexpr bool is_pos_inf() const { return rep_ == kPosRep; }
  constexpr bool is_neg_inf() const { return rep_ == kNegRep; }

  // Only meaningful for finite values.
  constexpr Rep value() const { return rep_; }

  constexpr auto operator<=>(const ExtInt&) const = default;

  std::string to_string() const;
  // Accepts decimal integers, "+inf", "inf" and "-inf".
  static std::optional<ExtInt> parse(std::string_view token);

 private:
  static constexpr Rep kPosRep = std::numeric_limits<Rep>::max();
  static constexpr Rep kNegRep = std::numeric_limits<Rep>::min();

  Rep rep_ = 0;
};

inline constexpr ExtInt kPosInf = ExtInt::pos_inf();
inline constexpr ExtInt kNegInf = ExtInt::neg_inf();

// (min,+) addition. +inf absorbs everything (a missing edge kills any walk
// through it), then -inf absorbs finite values.
constexpr ExtInt ext_add(ExtInt a, ExtInt b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return kPosInf;
  if (a.is_neg_inf() || b.is_neg_inf()) return kNegInf;
  return ExtInt(a.value() + b.value());
}

// Ceiling of a/2 toward +inf; infinities are fixed points.
constexpr ExtInt ext_ceil_half(ExtInt a) {
  if (!a.is_finite()) return a;
  const ExtInt::Rep v = a.value();
  return ExtInt(v >= 0 ? (v + 1) / 2 : -((-v) / 2));
}

// Subtracts one from finite values; infinities are fixed points.
constexpr ExtInt ext_decrement(ExtInt a) {
  return a.is_finite() ? ExtInt(a.value() - 1) : a;
}

std::ostream& operator<<(std::ostream& os, ExtInt x);

}  // namespace apsp

#endif  // APSP_EXT_INT_HPP_
