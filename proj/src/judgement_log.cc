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

#include "tempaxis/judgement_log.h"

#include <algorithm>

#include "tempaxis/error.h"
#include "tempaxis/file_util.h"

namespace tempaxis {

std::string FormatJudgementLine(const std::string &project_id, const Judgement &j) {
  std::string line = EscapeField(project_id);
  line += '\t';
  line += EscapeField(j.worker_id);
  line += '\t';
  line += EscapeField(j.question_id);
  line += '\t';
  line += Name(j.answer);
  line += '\t';
  line += FormatDouble(j.response_time);
  line += '\t';
  line += j.discarded ? '1' : '0';
  line += '\n';
  return line;
}

std::string ExportJudgementLog(const std::string &project_id,
                               std::vector<Judgement> judgements) {
  std::stable_sort(judgements.begin(), judgements.end(),
                   [](const Judgement &a, const Judgement &b) {
                     if (a.question_id != b.question_id) return a.question_id < b.question_id;
                     return a.worker_id < b.worker_id;
                   });
  std::string out;
  for (const Judgement &j : judgements) out += FormatJudgementLine(project_id, j);
  return out;
}

std::vector<LoggedJudgement> ParseJudgementLog(std::string_view text,
                                               const std::string &source) {
  std::vector<LoggedJudgement> out;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto fields = SplitTabs(line);
    if (fields.size() != 6) {
      throw Error(ErrorCode::kColumnCount,
                  where + ": expected 6 columns, got " + std::to_string(fields.size()));
    }
    LoggedJudgement record;
    record.project_id = UnescapeField(fields[0]);
    record.judgement.worker_id = UnescapeField(fields[1]);
    record.judgement.question_id = UnescapeField(fields[2]);
    const auto answer = ParseAnswer(fields[3]);
    if (!answer) throw Error(ErrorCode::kParseError, where + ": bad answer '" + std::string(fields[3]) + "'");
    record.judgement.answer = *answer;
    if (!ParseDouble(fields[4], &record.judgement.response_time)) {
      throw Error(ErrorCode::kParseError, where + ": bad response time");
    }
    if (fields[5] != "0" && fields[5] != "1") {
      throw Error(ErrorCode::kParseError, where + ": discarded flag must be 0 or 1");
    }
    record.judgement.discarded = fields[5] == "1";
    out.push_back(std::move(record));
  }
  return out;
}

}  // namespace tempaxis
