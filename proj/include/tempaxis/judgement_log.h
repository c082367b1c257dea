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

#ifndef TEMPAXIS_JUDGEMENT_LOG_H_
#define TEMPAXIS_JUDGEMENT_LOG_H_

#include <string>
#include <string_view>
#include <vector>

#include "tempaxis/annotation.h"

// Line-oriented judgement log:
//
//   project_id TAB worker_id TAB question_id TAB answer TAB response_time_s TAB discarded
//
// with answer YES|NO and discarded 0|1.

namespace tempaxis {

struct LoggedJudgement {
  std::string project_id;
  Judgement judgement;

  bool operator==(const LoggedJudgement &) const = default;
};

std::string FormatJudgementLine(const std::string &project_id, const Judgement &j);

// All judgements, ordered by (question_id, worker_id).
std::string ExportJudgementLog(const std::string &project_id,
                               std::vector<Judgement> judgements);

// Parses a log; kColumnCount / kParseError carry `source` and the line number.
std::vector<LoggedJudgement> ParseJudgementLog(std::string_view text,
                                               const std::string &source = "<log>");

}  // namespace tempaxis

#endif  // TEMPAXIS_JUDGEMENT_LOG_H_
