// Copyright 2026 The graphmin Authors
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

#ifndef GRAPHMIN_ERRORS_HPP_
#define GRAPHMIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace graphmin {

// A value violates the structural invariants of its type (unsorted
// combination, digit out of radix, self-loop, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument is structurally fine but outside the domain of the function
// (negative binomial argument, rank beyond the class size, n too large).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input. line() is 1-based; 0 means "no specific line".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace graphmin

#endif  // GRAPHMIN_ERRORS_HPP_
