// Copyright 2026 The posetgame Authors.
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

#include "posetgame/errors.h"

namespace posetgame {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput:
      return "MalformedInput";
    case ErrorCode::kEmptyPoset:
      return "EmptyPoset";
    case ErrorCode::kCycleDetected:
      return "CycleDetected";
    case ErrorCode::kUnknownElement:
      return "UnknownElement";
    case ErrorCode::kChainLimitExceeded:
      return "ChainLimitExceeded";
    case ErrorCode::kUnknownChain:
      return "UnknownChain";
    case ErrorCode::kConditionsViolated:
      return "ConditionsViolated";
    case ErrorCode::kTotalExceedsOne:
      return "TotalExceedsOne";
    case ErrorCode::kNotAcyclic:
      return "NotAcyclic";
    case ErrorCode::kDisconnected:
      return "Disconnected";
    case ErrorCode::kNecessaryConditionViolated:
      return "NecessaryConditionViolated";
    case ErrorCode::kPiAboveOne:
      return "PiAboveOne";
    case ErrorCode::kNonConserving:
      return "NonConserving";
    case ErrorCode::kPathLimitExceeded:
      return "PathLimitExceeded";
    case ErrorCode::kUnknownEdge:
      return "UnknownEdge";
    case ErrorCode::kEnumerationLimitExceeded:
      return "EnumerationLimitExceeded";
    case ErrorCode::kTooLarge:
      return "TooLarge";
  }
  return "Unknown";
}

bool IsResourceLimit(ErrorCode code) {
  return code == ErrorCode::kChainLimitExceeded ||
         code == ErrorCode::kPathLimitExceeded ||
         code == ErrorCode::kEnumerationLimitExceeded ||
         code == ErrorCode::kTooLarge;
}

bool IsConditionViolation(ErrorCode code) {
  return code == ErrorCode::kConditionsViolated ||
         code == ErrorCode::kNecessaryConditionViolated ||
         code == ErrorCode::kPiAboveOne ||
         code == ErrorCode::kTotalExceedsOne;
}

}  // namespace posetgame
