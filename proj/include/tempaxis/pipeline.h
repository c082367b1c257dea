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

#ifndef TEMPAXIS_PIPELINE_H_
#define TEMPAXIS_PIPELINE_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tempaxis/annotation.h"
#include "tempaxis/features.h"
#include "tempaxis/multiaxis.h"
#include "tempaxis/perceptron.h"
#include "tempaxis/relation_files.h"
#include "tempaxis/wordnet.h"

// Glue between the corpus, the crowd projects and the relation files.
//
// Question ids: "doc_id|eiid" for anchorability, "doc_id|eiid1|eiid2" for
// the relation questions. A pair's Q1 and Q2 questions share one id and live
// in separate projects.

namespace tempaxis {

std::string AnchorQuestionId(const std::string &doc_id, const std::string &eiid);
std::string PairQuestionId(const EventPair &pair);
// kParseError unless the id has exactly three '|'-separated parts.
EventPair ParsePairQuestionId(const std::string &question_id);

// The event's sentence as context, event highlighted.
Question MakeAnchorQuestion(const Document &doc, const Event &event);
// Sentences spanning both events, both highlighted.
Question MakePairQuestion(const Document &doc, const EventPair &pair);

std::vector<Question> AnchorabilityQuestions(const std::vector<Document> &docs);
std::vector<Question> RelationQuestions(const std::vector<Document> &docs,
                                        const std::vector<EventPair> &pairs);

// `count` question ids picked with a seeded shuffle, answered from `truth`.
// kInvalidConfig when fewer questions exist or truth is missing.
std::map<std::string, Answer> SelectGold(const std::vector<Question> &questions,
                                         const std::map<std::string, Answer> &truth,
                                         int count, std::uint64_t seed);

// Aggregates with gold answers filling in for gold questions.
std::map<std::string, Answer> AggregateWithGold(const AnnotationProject &project);

// Main-axis pairs between events whose anchorability answer is YES.
std::vector<EventPair> PairsFromAnchorability(const std::vector<Document> &docs,
                                              const std::map<std::string, Answer> &anchorable,
                                              int window_sentences = 2);

struct AggregatedRelations {
  RelationSet relations;               // start-point labels with token surfaces
  std::vector<std::string> incomplete;  // pair ids lacking a Q1 or Q2 aggregate
};

// Combines per-pair Q1 and Q2 aggregates; only ids present in either map are
// considered.
AggregatedRelations CombineRelationAnswers(const std::vector<Document> &docs,
                                           const std::map<std::string, Answer> &q1,
                                           const std::map<std::string, Answer> &q2);

// Same, taking token surfaces from the questions' highlighted context.
AggregatedRelations CombineRelationAnswers(const std::vector<Question> &questions,
                                           const std::map<std::string, Answer> &q1,
                                           const std::map<std::string, Answer> &q2);

// Truth answers for the crowd steps.
std::map<std::string, Answer> AnchorabilityTruth(
    const std::vector<Document> &docs,
    const std::map<std::string, std::vector<AxisAssignment>> &assignments);
// Keyed by pair question id; kMissingGold for a pair without a relation.
std::pair<std::map<std::string, Answer>, std::map<std::string, Answer>> RelationTruth(
    const std::vector<EventPair> &pairs, const RelationSet &gold);

// Qualifies `n_workers` workers answering from `truth` and lets each work
// until the project is exhausted for them. Worker ids are "<prefix>1"...
void RunScriptedWorkers(AnnotationProject &project, const std::map<std::string, Answer> &truth,
                        int n_workers, const std::string &prefix = "w");

struct ReplayConfig {
  QcConfig qc;
  int gold_per_project = 10;
  int n_workers = 5;
  int window_sentences = 2;
};

struct ReplayOutcome {
  std::unique_ptr<AnnotationProject> anchorability;
  std::unique_ptr<AnnotationProject> q1;
  std::unique_ptr<AnnotationProject> q2;
  std::vector<EventPair> pairs;
  AggregatedRelations relations;
};

// Corpus -> anchorability project -> Q1/Q2 projects -> aggregated relations,
// with every crowd step answered by scripted workers that copy the gold.
ReplayOutcome ReplayAnnotation(const std::vector<Document> &docs,
                               const std::map<std::string, std::vector<AxisAssignment>> &assignments,
                               const RelationSet &gold, const ReplayConfig &config);

// Baseline examples from the gold relations of the listed documents, in
// (doc list, key) order. kMissingGold when a listed document has no
// relations and kInvalidArgument when a relation names an unknown event.
std::vector<Example> BuildExamples(const std::vector<Document> &docs,
                                   const std::vector<std::string> &doc_ids,
                                   const RelationSet &gold, const WordNetIndex &wordnet);

// Majority-class predictor over the training labels (ties by label order).
PointRelation MajorityLabel(const std::vector<Example> &examples);

}  // namespace tempaxis

#endif  // TEMPAXIS_PIPELINE_H_
