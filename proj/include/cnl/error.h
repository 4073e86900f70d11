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

#ifndef CNL_ERROR_H_
#define CNL_ERROR_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace cnl {

enum class ErrorCode {
  kInvalidCharacter,
  kConflict,
  kMissingForm,
  kWrongCategory,
  kNotFound,
  kInUse,
  kUnknownToken,
  kSyntaxError,
  kDeadEnd,
  kUnresolvedAnaphor,
  kInaccessibleAntecedent,
  kUnsupportedQuestion,
  kResourceLimit,
  kInconsistentKb,
  kUnknownIndividual,
  kTooLarge,
  kCorruptFile,
  kUnknownWord,
  kIoError,
};

// Name of an error code, e.g. "SyntaxError".
const char *ErrorCodeName(ErrorCode code);

// Exception thrown by all engine operations. Depending on the code,
// 'position' is a character or token index and 'details' carries the
// offending surface form, the expected token set or the statement ids.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, int position = -1,
        std::vector<std::string> details = {});

  ErrorCode code() const { return code_; }
  int position() const { return position_; }
  const std::vector<std::string> &details() const { return details_; }

 private:
  ErrorCode code_;
  int position_;
  std::vector<std::string> details_;
};

}  // namespace cnl

#endif  // CNL_ERROR_H_
