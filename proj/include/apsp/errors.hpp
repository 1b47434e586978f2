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

#ifndef APSP_ERRORS_HPP_
#define APSP_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace apsp {

// Operand shapes do not conform (non-square, inner dimensions disagree, ...).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well-formed but outside the domain an operation accepts.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text could not be parsed into the expected structure.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A verification-mode assertion failed. Indicates an upstream bug or an
// instance that violates a caller-guaranteed precondition.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace apsp

#endif  // APSP_ERRORS_HPP_
