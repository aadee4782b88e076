// Copyright 2026 The cofsieve Authors
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

namespace cofsieve {

/// Every failure raised by the library carries one of these kinds. The C API
/// maps Parse to a usage error and everything else to a domain error.
enum class ErrorKind {
  Parse,
  InvalidArgument,
  NotAPartition,
  NonSymmetricInput,
  MixedParameters,
  NoValidFilling,
  NotAPermutation,
  NonPartitionContent,
  ContentMismatch,
  ShapeNotDivisible,
  SizeMismatch,
  ColumnTooTall,
  TooFewVariables,
  Overflow,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, std::string(error_kind_name(kind)) + ": " + msg);
}

}  // namespace cofsieve
