// Copyright 2026 The unicomp Authors. All Rights Reserved.
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

#ifndef UNICOMP_ERROR_HPP_
#define UNICOMP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace unicomp {

enum class ErrorKind {
  kInvalidArgument,
  kInvalidTopology,
  kDisconnectedGraph,
  kNumericalFailure,
  kDimensionMismatch,
  kOutOfRange,
  kIncompatibleContracts,
  kWrongClass,
  kSingularSystem,
  kIndexOutOfRange,
  kInvalidScale,
  kNonFiniteState,
  kInfeasibleParams,
  kMissingOracle,
  kDegenerateSeries,
  kConfigError,
  kOutputExists,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& reason)
      : std::runtime_error(reason), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the runner when a state entry stops being finite.
class DivergenceError : public Error {
 public:
  DivergenceError(long iteration, const std::string& reason)
      : Error(ErrorKind::kNonFiniteState, reason), iteration_(iteration) {}
  long iteration() const noexcept { return iteration_; }

 private:
  long iteration_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& reason) {
  throw Error(kind, reason);
}

inline void require(bool ok, ErrorKind kind, const std::string& reason) {
  if (!ok) fail(kind, reason);
}

}  // namespace unicomp

#endif  // UNICOMP_ERROR_HPP_
