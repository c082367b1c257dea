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

#ifndef TEMPAXIS_ANNOTATION_H_
#define TEMPAXIS_ANNOTATION_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tempaxis/relations.h"

// Two-step crowdsourced annotation with gold-seeded quality control.
//
// Workers first pass a qualifying test on gold questions. While working,
// hidden gold questions are mixed into their stream; a worker whose gold
// accuracy falls below the surviving threshold is banned and all of their
// judgements are discarded. Each question is answered yes/no by several
// workers and aggregated by majority vote.

namespace tempaxis {

enum class AnnotationStep : std::uint8_t { kAnchorability, kRelationQ1, kRelationQ2 };

std::string_view Name(AnnotationStep step);
std::optional<AnnotationStep> ParseAnnotationStep(std::string_view text);
std::string_view Name(Answer answer);
std::optional<Answer> ParseAnswer(std::string_view text);

struct Question {
  std::string question_id;
  std::string doc_id;
  std::string first;   // the event, or the first event of a pair
  std::string second;  // empty for anchorability questions
  // Context shown to the worker and the token positions to highlight.
  std::vector<std::string> context;
  std::vector<std::size_t> highlights;

  bool operator==(const Question &) const = default;
};

struct QcConfig {
  int qualify_size = 10;
  double qualify_threshold = 0.70;
  double survive_threshold = 0.70;
  int judgements_per_question = 5;
  double gold_injection_rate = 0.1;
  std::uint64_t rng_seed = 0;

  // Throws kInvalidConfig naming the offending field.
  void Validate() const;
};

struct Judgement {
  std::string worker_id;
  std::string question_id;
  Answer answer = Answer::kNo;
  double response_time = 0.0;  // seconds
  bool discarded = false;

  bool operator==(const Judgement &) const = default;
};

struct WorkerState {
  std::string worker_id;
  bool attempted_qualification = false;
  bool qualified = false;
  int gold_seen = 0;
  int gold_correct = 0;
  bool banned = false;
};

enum class SubmitStatus : std::uint8_t { kAccepted, kBanned };

struct QualityReport {
  double accuracy_on_gold = 0.0;
  double wawa = 0.0;
  double qualification_pass_rate = 0.0;
  double survival_rate = 0.0;
  double mean_response_time = 0.0;

  int gold_responses = 0;
  int gold_correct = 0;
  int wawa_responses = 0;   // N
  int wawa_agreements = 0;  // n
  int aggregated_questions = 0;
  int workers_attempted = 0;
  int workers_qualified = 0;
  int workers_banned = 0;
  int judgements = 0;
  int discarded_judgements = 0;
};

class AnnotationProject {
 public:
  // Throws kInvalidConfig for a bad config, duplicate question ids, gold
  // entries that are not questions, or fewer gold questions than the
  // qualifying test needs.
  AnnotationProject(std::string project_id, AnnotationStep step,
                    std::vector<Question> questions,
                    std::map<std::string, Answer> gold, QcConfig config);

  AnnotationProject(const AnnotationProject &) = delete;
  AnnotationProject &operator=(const AnnotationProject &) = delete;

  const std::string &project_id() const { return project_id_; }
  AnnotationStep step() const { return step_; }
  const QcConfig &config() const { return config_; }
  const std::vector<Question> &questions() const { return questions_; }
  const std::map<std::string, Answer> &gold() const { return gold_; }
  bool IsGold(const std::string &question_id) const;

  // Gold questions making up `worker_id`'s qualifying test, sampled with the
  // project seed and the worker id.
  std::vector<Question> QualificationQuestions(const std::string &worker_id) const;

  // Scores the qualifying test. Passing requires correct / qualify_size >=
  // qualify_threshold. Throws kAlreadyQualified on a second attempt and
  // kWrongQuestionSet when the answers do not cover the sampled questions.
  bool QualifyWorker(const std::string &worker_id,
                     const std::vector<std::pair<std::string, Answer>> &answers);

  // Next question for a qualified worker. An outstanding, unanswered
  // assignment is returned again, so a worker holds at most one at a time.
  // Throws kNotQualified, kBanned or kExhausted.
  Question NextTask(const std::string &worker_id);

  // Throws kUnknownQuestion, kDuplicate, kNotAssigned, kNotQualified or
  // kBanned.
  SubmitStatus SubmitJudgement(const std::string &worker_id,
                               const std::string &question_id, Answer answer,
                               double response_time);

  // Majority of the non-discarded answers; ties resolve to YES. Throws
  // kInsufficientJudgements below judgements_per_question.
  Answer AggregateQuestion(const std::string &question_id) const;

  // Aggregates of every question that has enough judgements.
  std::map<std::string, Answer> AggregateAll() const;

  QualityReport Report() const;

  std::vector<Judgement> Judgements() const;
  std::optional<WorkerState> Worker(const std::string &worker_id) const;

  // Replay hooks for persistence: apply a logged event without the
  // assignment bookkeeping of the live path.
  void RestoreQualification(const std::string &worker_id, bool passed);
  SubmitStatus RestoreJudgement(const std::string &worker_id,
                                const std::string &question_id, Answer answer,
                                double response_time);

 private:
  struct WorkerRecord {
    WorkerState state;
    std::set<std::string> answered;
    std::set<std::string> qualification_set;
    std::optional<std::string> outstanding;
    std::uint64_t tasks_issued = 0;
  };

  const Question &QuestionById(const std::string &question_id) const;
  WorkerRecord &RecordFor(const std::string &worker_id);
  SubmitStatus Apply(WorkerRecord &worker, const std::string &question_id,
                     Answer answer, double response_time);
  std::optional<Answer> AggregateLocked(const std::string &question_id) const;

  const std::string project_id_;
  const AnnotationStep step_;
  const std::vector<Question> questions_;
  const std::map<std::string, Answer> gold_;
  const QcConfig config_;
  std::map<std::string, std::size_t> question_index_;
  std::vector<std::string> gold_ids_;

  mutable std::mutex mu_;
  std::map<std::string, WorkerRecord> workers_;
  std::vector<Judgement> judgements_;
  // Per question: indices into judgements_.
  std::map<std::string, std::vector<std::size_t>> by_question_;
  std::map<std::string, int> live_counts_;
  std::map<std::string, int> reserved_;
};

// Point relation from the aggregated answers of the two relation questions.
PointRelation AggregateRelation(Answer q1, Answer q2);

// Majority vote over non-discarded judgements of each question, ties to YES.
// Questions with fewer than `min_judgements` live judgements are omitted.
std::map<std::string, Answer> AggregateJudgements(
    const std::vector<Judgement> &judgements, int min_judgements);

}  // namespace tempaxis

#endif  // TEMPAXIS_ANNOTATION_H_
