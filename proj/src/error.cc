// Copyright 2026 The cnlwiki Authors.
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

#include "cnl/error.h"

#include <utility>

namespace cnl {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCharacter: return "InvalidCharacter";
    case ErrorCode::kConflict: return "Conflict";
    case ErrorCode::kMissingForm: return "MissingForm";
    case ErrorCode::kWrongCategory: return "WrongCategory";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kInUse: return "InUse";
    case ErrorCode::kUnknownToken: return "UnknownToken";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDeadEnd: return "DeadEnd";
    case ErrorCode::kUnresolvedAnaphor: return "UnresolvedAnaphor";
    case ErrorCode::kInaccessibleAntecedent: return "InaccessibleAntecedent";
    case ErrorCode::kUnsupportedQuestion: return "UnsupportedQuestion";
    case ErrorCode::kResourceLimit: return "ResourceLimit";
    case ErrorCode::kInconsistentKb: return "InconsistentKb";
    case ErrorCode::kUnknownIndividual: return "UnknownIndividual";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kCorruptFile: return "CorruptFile";
    case ErrorCode::kUnknownWord: return "UnknownWord";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, int position,
             std::vector<std::string> details)
    : std::runtime_error(std::move(message)),
      code_(code),
      position_(position),
      details_(std::move(details)) {}

}  // namespace cnl
