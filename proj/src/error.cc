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

#include "tempaxis/error.h"

namespace tempaxis {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kUnsatisfiable: return "UNSATISFIABLE";
    case ErrorCode::kInconsistent: return "INCONSISTENT";
    case ErrorCode::kMissingAssignment: return "MISSING_ASSIGNMENT";
    case ErrorCode::kInvalidConfig: return "INVALID_CONFIG";
    case ErrorCode::kNotQualified: return "NOT_QUALIFIED";
    case ErrorCode::kBanned: return "BANNED";
    case ErrorCode::kExhausted: return "EXHAUSTED";
    case ErrorCode::kAlreadyQualified: return "ALREADY_QUALIFIED";
    case ErrorCode::kWrongQuestionSet: return "WRONG_QUESTION_SET";
    case ErrorCode::kNotAssigned: return "NOT_ASSIGNED";
    case ErrorCode::kDuplicate: return "DUPLICATE";
    case ErrorCode::kUnknownQuestion: return "UNKNOWN_QUESTION";
    case ErrorCode::kInsufficientJudgements: return "INSUFFICIENT_JUDGEMENTS";
    case ErrorCode::kLengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::kEmpty: return "EMPTY";
    case ErrorCode::kMissingPos: return "MISSING_POS";
    case ErrorCode::kEmptyTrainingSet: return "EMPTY_TRAINING_SET";
    case ErrorCode::kMissingGold: return "MISSING_GOLD";
    case ErrorCode::kMalformedXml: return "MALFORMED_XML";
    case ErrorCode::kDanglingInstance: return "DANGLING_INSTANCE";
    case ErrorCode::kUnknownLabel: return "UNKNOWN_LABEL";
    case ErrorCode::kDuplicatePair: return "DUPLICATE_PAIR";
    case ErrorCode::kColumnCount: return "COLUMN_COUNT";
    case ErrorCode::kMissingFile: return "MISSING_FILE";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kIo: return "IO";
  }
  return "UNKNOWN";
}

}  // namespace tempaxis
