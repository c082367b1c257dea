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

#include "tempaxis/annotation.h"

#include <algorithm>
#include <cctype>
#include <limits>

#include "tempaxis/error.h"
#include "tempaxis/random.h"

namespace tempaxis {
namespace {

bool MeetsThreshold(int correct, int total, double threshold) {
  return static_cast<double>(correct) >= threshold * total - 1e-9;
}

double Ratio(double num, double den) { return den > 0 ? num / den : 0.0; }

std::string Upper(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::string_view Name(AnnotationStep step) {
  switch (step) {
    case AnnotationStep::kAnchorability: return "ANCHORABILITY";
    case AnnotationStep::kRelationQ1: return "RELATION_Q1";
    case AnnotationStep::kRelationQ2: return "RELATION_Q2";
  }
  return "ANCHORABILITY";
}

std::optional<AnnotationStep> ParseAnnotationStep(std::string_view text) {
  const std::string upper = Upper(text);
  for (AnnotationStep step : {AnnotationStep::kAnchorability, AnnotationStep::kRelationQ1,
                              AnnotationStep::kRelationQ2}) {
    if (upper == Name(step)) return step;
  }
  return std::nullopt;
}

std::string_view Name(Answer answer) { return answer == Answer::kYes ? "YES" : "NO"; }

std::optional<Answer> ParseAnswer(std::string_view text) {
  const std::string upper = Upper(text);
  if (upper == "YES" || upper == "Y" || upper == "1") return Answer::kYes;
  if (upper == "NO" || upper == "N" || upper == "0") return Answer::kNo;
  return std::nullopt;
}

void QcConfig::Validate() const {
  auto fraction = [](double v, const char *name) {
    if (!(v > 0.0 && v <= 1.0)) {
      throw Error(ErrorCode::kInvalidConfig, std::string(name) + " must be in (0, 1]");
    }
  };
  fraction(qualify_threshold, "qualify_threshold");
  fraction(survive_threshold, "survive_threshold");
  if (qualify_size < 1) throw Error(ErrorCode::kInvalidConfig, "qualify_size must be >= 1");
  if (judgements_per_question < 1) {
    throw Error(ErrorCode::kInvalidConfig, "judgements_per_question must be >= 1");
  }
  if (!(gold_injection_rate >= 0.0 && gold_injection_rate <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "gold_injection_rate must be in [0, 1]");
  }
}

AnnotationProject::AnnotationProject(std::string project_id, AnnotationStep step,
                                     std::vector<Question> questions,
                                     std::map<std::string, Answer> gold,
                                     QcConfig config)
    : project_id_(std::move(project_id)),
      step_(step),
      questions_(std::move(questions)),
      gold_(std::move(gold)),
      config_(config) {
  config_.Validate();
  for (std::size_t i = 0; i < questions_.size(); ++i) {
    if (!question_index_.emplace(questions_[i].question_id, i).second) {
      throw Error(ErrorCode::kInvalidConfig,
                  "duplicate question id " + questions_[i].question_id);
    }
  }
  for (const auto &[id, answer] : gold_) {
    if (!question_index_.count(id)) {
      throw Error(ErrorCode::kInvalidConfig, "gold entry " + id + " is not a question");
    }
    gold_ids_.push_back(id);
  }
  if (static_cast<int>(gold_ids_.size()) < config_.qualify_size) {
    throw Error(ErrorCode::kInvalidConfig,
                "qualifying test needs " + std::to_string(config_.qualify_size) +
                    " gold questions, project has " + std::to_string(gold_ids_.size()));
  }
}

bool AnnotationProject::IsGold(const std::string &question_id) const {
  return gold_.count(question_id) > 0;
}

const Question &AnnotationProject::QuestionById(const std::string &question_id) const {
  auto it = question_index_.find(question_id);
  if (it == question_index_.end()) {
    throw Error(ErrorCode::kUnknownQuestion, "unknown question " + question_id);
  }
  return questions_[it->second];
}

AnnotationProject::WorkerRecord &AnnotationProject::RecordFor(const std::string &worker_id) {
  WorkerRecord &record = workers_[worker_id];
  record.state.worker_id = worker_id;
  return record;
}

std::vector<Question> AnnotationProject::QualificationQuestions(
    const std::string &worker_id) const {
  std::vector<std::string> ids = gold_ids_;
  Rng rng(SeedFor(config_.rng_seed, "qualify:" + worker_id));
  rng.Shuffle(ids);
  ids.resize(static_cast<std::size_t>(config_.qualify_size));
  std::sort(ids.begin(), ids.end());
  std::vector<Question> out;
  for (const std::string &id : ids) out.push_back(QuestionById(id));
  return out;
}

bool AnnotationProject::QualifyWorker(
    const std::string &worker_id,
    const std::vector<std::pair<std::string, Answer>> &answers) {
  std::vector<Question> expected = QualificationQuestions(worker_id);
  std::set<std::string> expected_ids;
  for (const Question &q : expected) expected_ids.insert(q.question_id);

  std::lock_guard<std::mutex> lock(mu_);
  WorkerRecord &worker = RecordFor(worker_id);
  if (worker.state.attempted_qualification) {
    throw Error(ErrorCode::kAlreadyQualified,
                "worker " + worker_id + " already took the qualifying test");
  }
  std::set<std::string> given;
  for (const auto &[id, answer] : answers) given.insert(id);
  if (given != expected_ids || answers.size() != expected_ids.size()) {
    throw Error(ErrorCode::kWrongQuestionSet,
                "answers do not match the qualifying questions of " + worker_id);
  }
  int correct = 0;
  for (const auto &[id, answer] : answers) {
    if (gold_.at(id) == answer) ++correct;
  }
  worker.state.attempted_qualification = true;
  worker.state.qualified = MeetsThreshold(correct, config_.qualify_size,
                                          config_.qualify_threshold);
  worker.qualification_set = expected_ids;
  return worker.state.qualified;
}

void AnnotationProject::RestoreQualification(const std::string &worker_id, bool passed) {
  std::vector<Question> expected = QualificationQuestions(worker_id);
  std::lock_guard<std::mutex> lock(mu_);
  WorkerRecord &worker = RecordFor(worker_id);
  worker.state.attempted_qualification = true;
  worker.state.qualified = passed;
  for (const Question &q : expected) worker.qualification_set.insert(q.question_id);
}

Question AnnotationProject::NextTask(const std::string &worker_id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = workers_.find(worker_id);
  if (it == workers_.end() || !it->second.state.qualified) {
    throw Error(ErrorCode::kNotQualified, "worker " + worker_id + " is not qualified");
  }
  WorkerRecord &worker = it->second;
  if (worker.state.banned) {
    throw Error(ErrorCode::kBanned, "worker " + worker_id + " is banned");
  }
  if (worker.outstanding) return QuestionById(*worker.outstanding);

  // Least-served open question first; ties by question order.
  const Question *work = nullptr;
  int best_load = std::numeric_limits<int>::max();
  for (const Question &q : questions_) {
    const std::string &id = q.question_id;
    if (IsGold(id) || worker.answered.count(id)) continue;
    const int live = live_counts_.count(id) ? live_counts_.at(id) : 0;
    if (live >= config_.judgements_per_question) continue;
    const int load = live + (reserved_.count(id) ? reserved_.at(id) : 0);
    if (load < best_load) {
      best_load = load;
      work = &q;
    }
  }
  if (work == nullptr) {
    throw Error(ErrorCode::kExhausted, "no questions left for worker " + worker_id);
  }

  std::vector<std::string> hidden_gold;
  for (const std::string &id : gold_ids_) {
    if (!worker.answered.count(id) && !worker.qualification_set.count(id)) {
      hidden_gold.push_back(id);
    }
  }
  Rng rng(SeedFor(config_.rng_seed,
                  "task:" + worker_id + "#" + std::to_string(worker.tasks_issued)));
  const Question *chosen = work;
  if (!hidden_gold.empty() && rng.Bernoulli(config_.gold_injection_rate)) {
    chosen = &QuestionById(hidden_gold[rng.Index(hidden_gold.size())]);
  } else {
    ++reserved_[work->question_id];
  }
  worker.outstanding = chosen->question_id;
  ++worker.tasks_issued;
  return *chosen;
}

SubmitStatus AnnotationProject::SubmitJudgement(const std::string &worker_id,
                                                const std::string &question_id,
                                                Answer answer, double response_time) {
  QuestionById(question_id);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = workers_.find(worker_id);
  if (it == workers_.end() || !it->second.state.qualified) {
    throw Error(ErrorCode::kNotQualified, "worker " + worker_id + " is not qualified");
  }
  WorkerRecord &worker = it->second;
  if (worker.state.banned) {
    throw Error(ErrorCode::kBanned, "worker " + worker_id + " is banned");
  }
  if (worker.answered.count(question_id)) {
    throw Error(ErrorCode::kDuplicate,
                "worker " + worker_id + " already answered " + question_id);
  }
  if (worker.outstanding != question_id) {
    throw Error(ErrorCode::kNotAssigned,
                "question " + question_id + " is not assigned to " + worker_id);
  }
  worker.outstanding.reset();
  auto reserved = reserved_.find(question_id);
  if (reserved != reserved_.end() && reserved->second > 0) --reserved->second;
  return Apply(worker, question_id, answer, response_time);
}

SubmitStatus AnnotationProject::RestoreJudgement(const std::string &worker_id,
                                                 const std::string &question_id,
                                                 Answer answer, double response_time) {
  QuestionById(question_id);
  std::lock_guard<std::mutex> lock(mu_);
  WorkerRecord &worker = RecordFor(worker_id);
  if (worker.answered.count(question_id)) {
    throw Error(ErrorCode::kDuplicate,
                "worker " + worker_id + " already answered " + question_id);
  }
  if (worker.state.banned) {
    // Logged after the ban took effect; keep it, discarded.
    judgements_.push_back({worker_id, question_id, answer, response_time, true});
    by_question_[question_id].push_back(judgements_.size() - 1);
    worker.answered.insert(question_id);
    return SubmitStatus::kBanned;
  }
  if (worker.outstanding == question_id) worker.outstanding.reset();
  ++worker.tasks_issued;
  return Apply(worker, question_id, answer, response_time);
}

SubmitStatus AnnotationProject::Apply(WorkerRecord &worker, const std::string &question_id,
                                      Answer answer, double response_time) {
  judgements_.push_back({worker.state.worker_id, question_id, answer, response_time, false});
  by_question_[question_id].push_back(judgements_.size() - 1);
  worker.answered.insert(question_id);

  auto gold = gold_.find(question_id);
  if (gold == gold_.end()) {
    ++live_counts_[question_id];
    return SubmitStatus::kAccepted;
  }
  ++worker.state.gold_seen;
  if (gold->second == answer) ++worker.state.gold_correct;
  if (worker.state.gold_seen >= config_.qualify_size &&
      !MeetsThreshold(worker.state.gold_correct, worker.state.gold_seen,
                      config_.survive_threshold)) {
    worker.state.banned = true;
    worker.outstanding.reset();
    for (Judgement &j : judgements_) {
      if (j.worker_id != worker.state.worker_id || j.discarded) continue;
      j.discarded = true;
      if (!IsGold(j.question_id)) --live_counts_[j.question_id];
    }
    return SubmitStatus::kBanned;
  }
  return SubmitStatus::kAccepted;
}

std::optional<Answer> AnnotationProject::AggregateLocked(const std::string &question_id) const {
  int yes = 0;
  int total = 0;
  auto it = by_question_.find(question_id);
  if (it != by_question_.end()) {
    for (std::size_t index : it->second) {
      const Judgement &j = judgements_[index];
      if (j.discarded) continue;
      ++total;
      if (j.answer == Answer::kYes) ++yes;
    }
  }
  if (total < config_.judgements_per_question) return std::nullopt;
  return 2 * yes >= total ? Answer::kYes : Answer::kNo;
}

Answer AnnotationProject::AggregateQuestion(const std::string &question_id) const {
  QuestionById(question_id);
  std::lock_guard<std::mutex> lock(mu_);
  std::optional<Answer> answer = AggregateLocked(question_id);
  if (!answer) {
    throw Error(ErrorCode::kInsufficientJudgements,
                question_id + " has fewer than " +
                    std::to_string(config_.judgements_per_question) + " live judgements");
  }
  return *answer;
}

std::map<std::string, Answer> AnnotationProject::AggregateAll() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::map<std::string, Answer> out;
  for (const Question &q : questions_) {
    if (auto answer = AggregateLocked(q.question_id)) out[q.question_id] = *answer;
  }
  return out;
}

QualityReport AnnotationProject::Report() const {
  std::lock_guard<std::mutex> lock(mu_);
  QualityReport report;
  double time_sum = 0.0;
  int live = 0;
  for (const Judgement &j : judgements_) {
    ++report.judgements;
    if (j.discarded) {
      ++report.discarded_judgements;
      continue;
    }
    ++live;
    time_sum += j.response_time;
    auto gold = gold_.find(j.question_id);
    if (gold != gold_.end()) {
      ++report.gold_responses;
      if (gold->second == j.answer) ++report.gold_correct;
    }
  }
  for (const Question &q : questions_) {
    std::optional<Answer> aggregate = AggregateLocked(q.question_id);
    if (!aggregate) continue;
    ++report.aggregated_questions;
    for (std::size_t index : by_question_.at(q.question_id)) {
      const Judgement &j = judgements_[index];
      if (j.discarded) continue;
      ++report.wawa_responses;
      if (j.answer == *aggregate) ++report.wawa_agreements;
    }
  }
  for (const auto &[id, worker] : workers_) {
    if (!worker.state.attempted_qualification) continue;
    ++report.workers_attempted;
    if (!worker.state.qualified) continue;
    ++report.workers_qualified;
    if (worker.state.banned) ++report.workers_banned;
  }
  report.accuracy_on_gold = Ratio(report.gold_correct, report.gold_responses);
  report.wawa = Ratio(report.wawa_agreements, report.wawa_responses);
  report.qualification_pass_rate = Ratio(report.workers_qualified, report.workers_attempted);
  report.survival_rate = Ratio(report.workers_qualified - report.workers_banned,
                               report.workers_qualified);
  report.mean_response_time = Ratio(time_sum, live);
  return report;
}

std::vector<Judgement> AnnotationProject::Judgements() const {
  std::lock_guard<std::mutex> lock(mu_);
  return judgements_;
}

std::optional<WorkerState> AnnotationProject::Worker(const std::string &worker_id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = workers_.find(worker_id);
  if (it == workers_.end()) return std::nullopt;
  return it->second.state;
}

PointRelation AggregateRelation(Answer q1, Answer q2) {
  return AnswersToRelation({q1, q2});
}

std::map<std::string, Answer> AggregateJudgements(const std::vector<Judgement> &judgements,
                                                  int min_judgements) {
  std::map<std::string, std::pair<int, int>> tally;  // yes, total
  for (const Judgement &j : judgements) {
    if (j.discarded) continue;
    auto &[yes, total] = tally[j.question_id];
    ++total;
    if (j.answer == Answer::kYes) ++yes;
  }
  std::map<std::string, Answer> out;
  for (const auto &[id, counts] : tally) {
    if (counts.second < min_judgements) continue;
    out[id] = 2 * counts.first >= counts.second ? Answer::kYes : Answer::kNo;
  }
  return out;
}

}  // namespace tempaxis
