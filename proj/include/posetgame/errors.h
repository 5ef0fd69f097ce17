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

#ifndef POSETGAME_ERRORS_H_
#define POSETGAME_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetgame {

enum class ErrorCode {
  kMalformedInput,
  kEmptyPoset,
  kCycleDetected,
  kUnknownElement,
  kChainLimitExceeded,
  kUnknownChain,
  kConditionsViolated,
  kTotalExceedsOne,
  kNotAcyclic,
  kDisconnected,
  kNecessaryConditionViolated,
  kPiAboveOne,
  kNonConserving,
  kPathLimitExceeded,
  kUnknownEdge,
  kEnumerationLimitExceeded,
  kTooLarge,
};

std::string_view ErrorCodeName(ErrorCode code);

// True for the codes raised when an enumeration or size cap is hit.
bool IsResourceLimit(ErrorCode code);

// True for the codes raised when input data violate the problem conditions.
bool IsConditionViolation(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace posetgame

#endif  // POSETGAME_ERRORS_H_
