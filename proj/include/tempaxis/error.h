// Copyright 2026 The Tempaxis Authors.
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

#ifndef TEMPAXIS_ERROR_H_
#define TEMPAXIS_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tempaxis {

enum class ErrorCode {
  kInvalidArgument,
  // Algebra.
  kUnsatisfiable,
  kInconsistent,
  // Corpus model.
  kMissingAssignment,
  // Annotation workflow.
  kInvalidConfig,
  kNotQualified,
  kBanned,
  kExhausted,
  kAlreadyQualified,
  kWrongQuestionSet,
  kNotAssigned,
  kDuplicate,
  kUnknownQuestion,
  kInsufficientJudgements,
  // Metrics.
  kLengthMismatch,
  kEmpty,
  // Baseline.
  kMissingPos,
  kEmptyTrainingSet,
  kMissingGold,
  // Corpus formats.
  kMalformedXml,
  kDanglingInstance,
  kUnknownLabel,
  kDuplicatePair,
  kColumnCount,
  kMissingFile,
  kParseError,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Exception type used throughout the library. The message carries
// provenance (file, line, offending key) where there is any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tempaxis

#endif  // TEMPAXIS_ERROR_H_
