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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "minreal/matrix.hpp"
#include "minreal/ratfun.hpp"

namespace minreal {

/// Problem-file format.
///
///   field (gf INT | q)
///   rows INT
///   cols INT
///   T[i][j] = ratexpr          (1-based; unspecified entries are zero)
///
/// ratexpr  := polyexpr [ "/" polyexpr ]
/// polyexpr := term { ("+"|"-") term }
/// term     := factor { "*" factor }
/// factor   := base [ "^" INT ]
/// base     := INT | "s" | "(" polyexpr ")"
///
/// A `verify` problem continues with a scalar state-space payload:
///
///   states INT
///   F[i][j] = scalar           (states x states)
///   G[i][j] = scalar           (states x cols)
///   H[i][j] = scalar           (rows x states)
struct VerifyPayload {
    std::size_t states;
    Matrix F;
    Matrix G;
    Matrix H;
};

struct ProblemFile {
    Field field;
    std::size_t rows;
    std::size_t cols;
    RatMatrix T;
    std::optional<VerifyPayload> payload;
};

/// Parses UTF-8 problem text; ParseError carries line and column. Over
/// GF(p) integer literals reduce mod p; duplicate entries are errors.
ProblemFile parse_problem(std::string_view text);

/// Prints a matrix in the problem-file format (nonzero entries only);
/// parsing the result reproduces the matrix exactly.
std::string format_problem(const RatMatrix& T);

enum class Command { realize, jnf, smf, verify };

struct RunOptions {
    bool json = false;
    std::uint64_t seed = default_factor_seed;
};

struct RunResult {
    int exit_code;       // 0 pass, 2 failed check
    std::string output;  // human text or a JSON document
};

/// Runs one CLI command against a parsed problem. Throws UsageError /
/// ParseError-style failures for invalid input (exit 1 at the CLI) and
/// InternalError for broken invariants (exit 3).
RunResult run_command(Command command, const ProblemFile& problem, const RunOptions& options);

}  // namespace minreal
