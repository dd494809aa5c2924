// Copyright 2026 The unistat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNISTAT_ERRORS_H_
#define UNISTAT_ERRORS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace unistat {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph file. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A structural invariant of an input value does not hold.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

// Brute-force size caps (edges or vertices) were exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Positive probability mass sits on a vertex with no out-edge.
class WalkUndefined : public Error {
 public:
  explicit WalkUndefined(std::uint32_t vertex)
      : Error("walk undefined: vertex " + std::to_string(vertex) +
              " carries mass but has out-degree 0"),
        vertex_(vertex) {}
  std::uint32_t vertex() const { return vertex_; }

 private:
  std::uint32_t vertex_;
};

// Generator refused an infeasible family/mode combination.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// A capped query oracle was asked to reveal more edges than allowed.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace unistat

#endif  // UNISTAT_ERRORS_H_
