// Copyright 2026 The qautk Authors
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

#ifndef QAUTK_ERROR_HPP_
#define QAUTK_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qautk {

enum class ErrorKind {
  InvalidArgument,  // malformed input: shapes, ranges, non-group tables
  Parse,            // text/JSON that could not be read
  Domain,           // well-formed input violating a mathematical precondition
  Inconsistent,     // an internal construction failed a consistency check
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qautk

#endif  // QAUTK_ERROR_HPP_
