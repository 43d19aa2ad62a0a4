// Copyright 2026 The expapx Authors.
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

#ifndef EXPAPX_ERROR_HPP_
#define EXPAPX_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace expapx {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// An instance or argument violates a documented invariant.
class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  SizeLimitError(const std::string& solver, std::size_t size, std::size_t limit)
      : Error(solver + ": size " + std::to_string(size) + " exceeds limit " +
              std::to_string(limit)),
        size_(size),
        limit_(limit) {}
  std::size_t size() const { return size_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t size_;
  std::size_t limit_;
};

// A caller broke a procedure's input contract (e.g. an improper sub-coloring).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Something that the proofs say cannot happen did happen.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace expapx

#endif  // EXPAPX_ERROR_HPP_
