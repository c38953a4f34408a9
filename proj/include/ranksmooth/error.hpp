// Copyright 2026 The ranksmooth Authors.
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

#include <stdexcept>
#include <string>
#include <vector>

namespace ranksmooth {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed comparison or result file.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The transition chain has more than one strongly connected component, so
// its stationary distribution is not unique.
class ReducibleChainError : public Error {
 public:
  ReducibleChainError(const std::string& what,
                      std::vector<std::vector<std::size_t>> components)
      : Error(what), components_(std::move(components)) {}

  const std::vector<std::vector<std::size_t>>& components() const {
    return components_;
  }

 private:
  std::vector<std::vector<std::size_t>> components_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ranksmooth
