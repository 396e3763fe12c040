// Copyright 2026 the distlabel authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace distlabel {

/// Input text could not be decoded. `offset` is the byte position of the
/// first offending character (or the text length for truncated input).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called on an input violating its stated hypothesis
/// (disconnected graph, girth too small, size mismatch, bad parameters...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A random generator could not place the requested structure within its
/// retry budget (or the parameters are outright impossible).
class GenerationInfeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search exceeded its configured node budget. Never treated as a result:
/// callers must not confuse "ran out of budget" with "trivial group" or
/// "no labeling exists".
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal construction produced something that contradicts what it is
/// supposed to guarantee. Always a bug (or a disproof); carries diagnostics.
class ConstructionDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace distlabel
