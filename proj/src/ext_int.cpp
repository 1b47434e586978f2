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

#include "apsp/ext_int.hpp"

#include <charconv>
#include <ostream>

namespace apsp {

std::string ExtInt::to_string() const {
  if (is_pos_inf()) return "+inf";
  if (is_neg_inf()) return "-inf";
  return std::to_string(rep_);
}

std::optional<ExtInt> ExtInt::parse(std::string_view token) {
  if (token == "+inf" || token == "inf") return kPosInf;
  if (token == "-inf") return kNegInf;
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);
    if (!token.empty() && token.front() == '-') return std::nullopt;
  }
  Rep v = 0;
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (token.empty() || ec != std::errc() || ptr != last) return std::nullopt;
  if (v == kPosRep || v == kNegRep) return std::nullopt;
  return ExtInt(v);
}

std::ostream& operator<<(std::ostream& os, ExtInt x) {
  return os << x.to_string();
}

}  // namespace apsp
