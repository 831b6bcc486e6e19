/*
 * Copyright 2026 The relayrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace relay {

/// Argument outside a function's mathematical domain (nonpositive time,
/// probability outside (0,1), non-finite input, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Fewer observations than the operation needs.
struct InsufficientDataError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Sample with zero variance where a positive spread is required.
struct DegenerateSampleError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Duplicate places in data that must be tie-free.
struct TieViolationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Least-squares system with no unique solution (zero input variance).
struct SingularFitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear-algebra factorization failed even after jitter escalation.
struct IllConditionedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Structurally invalid data (broken table invariants, bad file contents).
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed file content; carries the 1-based line number.
struct ParseError : ValidationError {
  ParseError(const std::string& what, long line_number)
      : ValidationError(what + " (line " + std::to_string(line_number) + ")"),
        line(line_number) {}
  long line;
};

/// Invalid configuration (simulator or experiment parameters, CLI flags).
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Filesystem failure while reading or writing.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace relay
