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

#include "tempaxis/crowd_simulation.h"

#include <string>

#include "tempaxis/error.h"
#include "tempaxis/random.h"

namespace tempaxis {
namespace {

Answer Flip(Answer a) { return a == Answer::kYes ? Answer::kNo : Answer::kYes; }

}  // namespace

QualityReport SimulateCrowd(const SimulationConfig &config) {
  if (config.population.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "worker population is empty");
  }
  for (const WorkerModel &model : config.population) {
    if (!(model.accuracy >= 0.0 && model.accuracy <= 1.0)) {
      throw Error(ErrorCode::kInvalidConfig, "worker accuracy must be in [0, 1]");
    }
  }
  if (config.n_workers < 0 || config.n_questions < 0 || config.n_gold < 0) {
    throw Error(ErrorCode::kInvalidConfig, "counts must be non-negative");
  }

  Rng truth_rng(SeedFor(config.seed, "truth"));
  std::vector<Question> questions;
  std::map<std::string, Answer> gold;
  std::map<std::string, Answer> truth;
  auto add = [&](const std::string &id, bool is_gold) {
    Question q;
    q.question_id = id;
    q.doc_id = "sim";
    q.first = id;
    questions.push_back(q);
    const Answer answer = truth_rng.Bernoulli(0.5) ? Answer::kYes : Answer::kNo;
    truth[id] = answer;
    if (is_gold) gold[id] = answer;
  };
  for (int i = 0; i < config.n_gold; ++i) add("g" + std::to_string(i), true);
  for (int i = 0; i < config.n_questions; ++i) add("q" + std::to_string(i), false);

  QcConfig qc = config.qc;
  qc.rng_seed = config.seed;
  AnnotationProject project("simulation", AnnotationStep::kRelationQ1, std::move(questions),
                            std::move(gold), qc);

  for (int w = 0; w < config.n_workers; ++w) {
    const WorkerModel &model = config.population[static_cast<std::size_t>(w) %
                                                 config.population.size()];
    const std::string worker_id = "w" + std::to_string(w);
    Rng rng(SeedFor(config.seed, "worker:" + worker_id));
    auto respond = [&](const std::string &question_id) {
      const Answer right = truth.at(question_id);
      return rng.Bernoulli(model.accuracy) ? right : Flip(right);
    };

    std::vector<std::pair<std::string, Answer>> answers;
    for (const Question &q : project.QualificationQuestions(worker_id)) {
      answers.emplace_back(q.question_id, respond(q.question_id));
    }
    if (!project.QualifyWorker(worker_id, answers)) continue;

    for (int t = 0; t < config.max_tasks_per_worker; ++t) {
      Question task;
      try {
        task = project.NextTask(worker_id);
      } catch (const Error &e) {
        if (e.code() == ErrorCode::kExhausted || e.code() == ErrorCode::kBanned) break;
        throw;
      }
      const Answer answer = respond(task.question_id);
      const double seconds = rng.Exponential(model.mean_response_time);
      if (project.SubmitJudgement(worker_id, task.question_id, answer, seconds) ==
          SubmitStatus::kBanned) {
        break;
      }
    }
  }
  return project.Report();
}

}  // namespace tempaxis
