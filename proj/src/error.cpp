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

#include "unicomp/error.hpp"

namespace unicomp {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInvalidTopology: return "InvalidTopology";
    case ErrorKind::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::kNumericalFailure: return "NumericalFailure";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kIncompatibleContracts: return "IncompatibleContracts";
    case ErrorKind::kWrongClass: return "WrongClass";
    case ErrorKind::kSingularSystem: return "SingularSystem";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kInvalidScale: return "InvalidScale";
    case ErrorKind::kNonFiniteState: return "NonFiniteState";
    case ErrorKind::kInfeasibleParams: return "InfeasibleParams";
    case ErrorKind::kMissingOracle: return "MissingOracle";
    case ErrorKind::kDegenerateSeries: return "DegenerateSeries";
    case ErrorKind::kConfigError: return "ConfigError";
    case ErrorKind::kOutputExists: return "OutputExists";
  }
  return "Unknown";
}

}  // namespace unicomp
