// Copyright 2026 The ghostpulse Authors.
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

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ghostpulse {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (words, graph files, CLI arguments).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on a domain value does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The all-zero and the empty word have no maximal-run form.
class NoRunForm : public DomainError {
 public:
  NoRunForm() : DomainError("word has no maximal-run form (empty or all-zero)") {}
};

/// A search or construction exceeded its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A decoder met a block it cannot invert in its current state.
class CorruptStream : public Error {
 public:
  using Error::Error;
};

/// Encoder synthesis failed for the requested parameters.
class Infeasible : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

}  // namespace detail
}  // namespace ghostpulse
