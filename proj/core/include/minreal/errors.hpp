/*
   Copyright 2026 The minreal authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minreal {

/// Caller misuse: mismatched fields, bad shapes, violated preconditions.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Value-level failure such as division by zero or a singular matrix.
struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Rational factorization outside the supported range. Raised instead of
/// ever returning an uncertified answer.
struct FactorRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A broken internal invariant; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Problem-file syntax error with source position (1-based).
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

}  // namespace minreal
