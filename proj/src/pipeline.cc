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

#include "tempaxis/pipeline.h"

#include <algorithm>
#include <set>

#include "tempaxis/error.h"
#include "tempaxis/random.h"

namespace tempaxis {
namespace {

const Document &DocumentById(const std::vector<Document> &docs, const std::string &doc_id) {
  for (const Document &d : docs) {
    if (d.doc_id == doc_id) return d;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown document " + doc_id);
}

const Event &EventOrThrow(const Document &doc, const std::string &id) {
  const Event *e = FindEventById(doc, id);
  if (e == nullptr) throw Error(ErrorCode::kInvalidArgument, doc.doc_id + ": unknown event " + id);
  return *e;
}

// Tokens of sentences [from, to] and the index of the first one.
std::pair<std::vector<std::string>, std::size_t> SentenceSpan(const Document &doc, int from,
                                                              int to) {
  std::vector<std::string> words;
  std::size_t start = doc.tokens.size();
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const int s = doc.tokens[i].sentence;
    if (s < from || s > to) continue;
    start = std::min(start, i);
    words.push_back(doc.tokens[i].surface);
  }
  return {words, start};
}

}  // namespace

std::string AnchorQuestionId(const std::string &doc_id, const std::string &eiid) {
  return doc_id + "|" + eiid;
}

std::string PairQuestionId(const EventPair &pair) {
  return pair.doc_id + "|" + pair.first + "|" + pair.second;
}

EventPair ParsePairQuestionId(const std::string &question_id) {
  const std::size_t a = question_id.find('|');
  const std::size_t b = a == std::string::npos ? a : question_id.find('|', a + 1);
  if (b == std::string::npos || question_id.find('|', b + 1) != std::string::npos) {
    throw Error(ErrorCode::kParseError, "not a pair question id: " + question_id);
  }
  return {question_id.substr(a + 1, b - a - 1), question_id.substr(b + 1),
          question_id.substr(0, a)};
}

Question MakeAnchorQuestion(const Document &doc, const Event &event) {
  const int s = doc.SentenceOf(event);
  auto [context, start] = SentenceSpan(doc, s, s);
  return {AnchorQuestionId(doc.doc_id, event.eiid), doc.doc_id, event.eiid, "",
          std::move(context), {event.token_offset - start}};
}

Question MakePairQuestion(const Document &doc, const EventPair &pair) {
  const Event &e1 = EventOrThrow(doc, pair.first);
  const Event &e2 = EventOrThrow(doc, pair.second);
  const int s1 = doc.SentenceOf(e1);
  const int s2 = doc.SentenceOf(e2);
  auto [context, start] = SentenceSpan(doc, std::min(s1, s2), std::max(s1, s2));
  return {PairQuestionId(pair), doc.doc_id, pair.first, pair.second, std::move(context),
          {e1.token_offset - start, e2.token_offset - start}};
}

std::vector<Question> AnchorabilityQuestions(const std::vector<Document> &docs) {
  std::vector<Question> out;
  for (const Document &doc : docs) {
    for (const Event &e : doc.events) out.push_back(MakeAnchorQuestion(doc, e));
  }
  return out;
}

std::vector<Question> RelationQuestions(const std::vector<Document> &docs,
                                        const std::vector<EventPair> &pairs) {
  std::vector<Question> out;
  for (const EventPair &p : pairs) out.push_back(MakePairQuestion(DocumentById(docs, p.doc_id), p));
  return out;
}

std::map<std::string, Answer> SelectGold(const std::vector<Question> &questions,
                                         const std::map<std::string, Answer> &truth, int count,
                                         std::uint64_t seed) {
  if (count < 0 || static_cast<std::size_t>(count) > questions.size()) {
    throw Error(ErrorCode::kInvalidConfig, "cannot pick " + std::to_string(count) +
                                               " gold questions out of " +
                                               std::to_string(questions.size()));
  }
  std::vector<std::string> ids;
  for (const Question &q : questions) ids.push_back(q.question_id);
  Rng rng(SeedFor(seed, "gold"));
  rng.Shuffle(ids);
  std::map<std::string, Answer> gold;
  for (int i = 0; i < count; ++i) {
    auto it = truth.find(ids[static_cast<std::size_t>(i)]);
    if (it == truth.end()) {
      throw Error(ErrorCode::kInvalidConfig, "no truth for gold question " + ids[i]);
    }
    gold.insert(*it);
  }
  return gold;
}

std::map<std::string, Answer> AggregateWithGold(const AnnotationProject &project) {
  std::map<std::string, Answer> out = project.AggregateAll();
  for (const auto &[id, answer] : project.gold()) out[id] = answer;
  return out;
}

std::vector<EventPair> PairsFromAnchorability(const std::vector<Document> &docs,
                                              const std::map<std::string, Answer> &anchorable,
                                              int window_sentences) {
  std::vector<EventPair> out;
  for (const Document &doc : docs) {
    std::vector<std::string> members;
    for (const Event &e : doc.events) {
      auto it = anchorable.find(AnchorQuestionId(doc.doc_id, e.eiid));
      if (it != anchorable.end() && it->second == Answer::kYes) members.push_back(e.eiid);
    }
    std::vector<EventPair> pairs = GeneratePairs(doc, members, window_sentences);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

AggregatedRelations CombineRelationAnswers(const std::vector<Document> &docs,
                                           const std::map<std::string, Answer> &q1,
                                           const std::map<std::string, Answer> &q2) {
  AggregatedRelations out;
  out.relations.source = RelationSource::kMatres;
  std::set<std::string> ids;
  for (const auto &[id, answer] : q1) ids.insert(id);
  for (const auto &[id, answer] : q2) ids.insert(id);
  for (const std::string &id : ids) {
    auto a1 = q1.find(id);
    auto a2 = q2.find(id);
    if (a1 == q1.end() || a2 == q2.end()) {
      out.incomplete.push_back(id);
      continue;
    }
    const EventPair pair = ParsePairQuestionId(id);
    const Document &doc = DocumentById(docs, pair.doc_id);
    const Event &e1 = EventOrThrow(doc, pair.first);
    const Event &e2 = EventOrThrow(doc, pair.second);
    out.relations.Add({pair.doc_id, pair.first, pair.second},
                      {AggregateRelation(a1->second, a2->second),
                       doc.tokens[e1.token_offset].surface, doc.tokens[e2.token_offset].surface});
  }
  return out;
}

AggregatedRelations CombineRelationAnswers(const std::vector<Question> &questions,
                                           const std::map<std::string, Answer> &q1,
                                           const std::map<std::string, Answer> &q2) {
  std::map<std::string, const Question *> by_id;
  for (const Question &q : questions) by_id[q.question_id] = &q;
  auto surface = [](const Question &q, std::size_t i) {
    if (i >= q.highlights.size() || q.highlights[i] >= q.context.size()) {
      throw Error(ErrorCode::kInvalidArgument, "question " + q.question_id + " lacks highlight");
    }
    return q.context[q.highlights[i]];
  };
  AggregatedRelations out;
  out.relations.source = RelationSource::kMatres;
  std::set<std::string> ids;
  for (const auto &[id, answer] : q1) ids.insert(id);
  for (const auto &[id, answer] : q2) ids.insert(id);
  for (const std::string &id : ids) {
    auto a1 = q1.find(id);
    auto a2 = q2.find(id);
    auto q = by_id.find(id);
    if (a1 == q1.end() || a2 == q2.end() || q == by_id.end()) {
      out.incomplete.push_back(id);
      continue;
    }
    const EventPair pair = ParsePairQuestionId(id);
    out.relations.Add({pair.doc_id, pair.first, pair.second},
                      {AggregateRelation(a1->second, a2->second), surface(*q->second, 0),
                       surface(*q->second, 1)});
  }
  return out;
}

std::map<std::string, Answer> AnchorabilityTruth(
    const std::vector<Document> &docs,
    const std::map<std::string, std::vector<AxisAssignment>> &assignments) {
  std::map<std::string, Answer> out;
  for (const Document &doc : docs) {
    auto it = assignments.find(doc.doc_id);
    for (const Event &e : doc.events) {
      const AxisAssignment *found = nullptr;
      if (it != assignments.end()) {
        for (const AxisAssignment &a : it->second) {
          if (a.eiid == e.eiid) found = &a;
        }
      }
      if (found == nullptr) {
        throw Error(ErrorCode::kMissingAssignment,
                    doc.doc_id + ": no axis assignment for " + e.eiid);
      }
      out[AnchorQuestionId(doc.doc_id, e.eiid)] =
          found->anchorable_on_main ? Answer::kYes : Answer::kNo;
    }
  }
  return out;
}

std::pair<std::map<std::string, Answer>, std::map<std::string, Answer>> RelationTruth(
    const std::vector<EventPair> &pairs, const RelationSet &gold) {
  std::map<std::string, Answer> q1, q2;
  for (const EventPair &p : pairs) {
    const RelationKey key{p.doc_id, p.first, p.second};
    PointRelation label;
    if (const RelationEntry *e = gold.Find(key)) {
      label = ProjectLabel(e->label);
    } else if (const RelationEntry *r = gold.Find(key.Reversed())) {
      label = Inverse(ProjectLabel(r->label));
    } else {
      throw Error(ErrorCode::kMissingGold, "no gold relation for " + PairQuestionId(p));
    }
    const AnswerPair answers = RelationToAnswers(label);
    q1[PairQuestionId(p)] = answers.q1;
    q2[PairQuestionId(p)] = answers.q2;
  }
  return {q1, q2};
}

void RunScriptedWorkers(AnnotationProject &project, const std::map<std::string, Answer> &truth,
                        int n_workers, const std::string &prefix) {
  auto answer_of = [&](const std::string &id) {
    auto it = truth.find(id);
    if (it == truth.end()) throw Error(ErrorCode::kMissingGold, "no scripted answer for " + id);
    return it->second;
  };
  for (int w = 1; w <= n_workers; ++w) {
    const std::string worker = prefix + std::to_string(w);
    std::vector<std::pair<std::string, Answer>> answers;
    for (const Question &q : project.QualificationQuestions(worker)) {
      answers.emplace_back(q.question_id, answer_of(q.question_id));
    }
    if (!project.QualifyWorker(worker, answers)) continue;
    while (true) {
      Question q;
      try {
        q = project.NextTask(worker);
      } catch (const Error &e) {
        if (e.code() == ErrorCode::kExhausted || e.code() == ErrorCode::kBanned) break;
        throw;
      }
      if (project.SubmitJudgement(worker, q.question_id, answer_of(q.question_id), 1.0) ==
          SubmitStatus::kBanned) {
        break;
      }
    }
  }
}

ReplayOutcome ReplayAnnotation(const std::vector<Document> &docs,
                               const std::map<std::string, std::vector<AxisAssignment>> &assignments,
                               const RelationSet &gold, const ReplayConfig &config) {
  ReplayOutcome out;
  const auto anchor_truth = AnchorabilityTruth(docs, assignments);
  std::vector<Question> anchor_questions = AnchorabilityQuestions(docs);
  auto anchor_gold =
      SelectGold(anchor_questions, anchor_truth, config.gold_per_project, config.qc.rng_seed);
  out.anchorability = std::make_unique<AnnotationProject>(
      "anchorability", AnnotationStep::kAnchorability, std::move(anchor_questions),
      std::move(anchor_gold), config.qc);
  RunScriptedWorkers(*out.anchorability, anchor_truth, config.n_workers);

  out.pairs = PairsFromAnchorability(docs, AggregateWithGold(*out.anchorability),
                                     config.window_sentences);
  const auto [q1_truth, q2_truth] = RelationTruth(out.pairs, gold);
  const std::vector<Question> relation_questions = RelationQuestions(docs, out.pairs);
  auto q1_gold = SelectGold(relation_questions, q1_truth, config.gold_per_project,
                            config.qc.rng_seed);
  std::map<std::string, Answer> q2_gold;
  for (const auto &[id, answer] : q1_gold) q2_gold[id] = q2_truth.at(id);
  out.q1 = std::make_unique<AnnotationProject>("q1", AnnotationStep::kRelationQ1,
                                               relation_questions, std::move(q1_gold), config.qc);
  out.q2 = std::make_unique<AnnotationProject>("q2", AnnotationStep::kRelationQ2,
                                               relation_questions, std::move(q2_gold), config.qc);
  RunScriptedWorkers(*out.q1, q1_truth, config.n_workers);
  RunScriptedWorkers(*out.q2, q2_truth, config.n_workers);
  out.relations = CombineRelationAnswers(docs, AggregateWithGold(*out.q1),
                                         AggregateWithGold(*out.q2));
  return out;
}

std::vector<Example> BuildExamples(const std::vector<Document> &docs,
                                   const std::vector<std::string> &doc_ids,
                                   const RelationSet &gold, const WordNetIndex &wordnet) {
  std::vector<Example> out;
  for (const std::string &doc_id : doc_ids) {
    const Document &doc = DocumentById(docs, doc_id);
    auto it = gold.entries.lower_bound({doc_id, "", ""});
    if (it == gold.entries.end() || it->first.doc_id != doc_id) {
      throw Error(ErrorCode::kMissingGold, "no gold relations for document " + doc_id);
    }
    for (; it != gold.entries.end() && it->first.doc_id == doc_id; ++it) {
      const EventPair pair{it->first.first, it->first.second, doc_id};
      out.push_back({ExtractFeatures(pair, doc, wordnet), ProjectLabel(it->second.label)});
    }
  }
  return out;
}

PointRelation MajorityLabel(const std::vector<Example> &examples) {
  std::array<long long, kNumClasses> counts{};
  for (const Example &ex : examples) ++counts[static_cast<std::size_t>(ex.label)];
  std::size_t best = 0;
  for (std::size_t k = 1; k < kNumClasses; ++k) {
    if (counts[k] > counts[best]) best = k;
  }
  return kPointRelations[best];
}

}  // namespace tempaxis
