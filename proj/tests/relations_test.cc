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

#include "tempaxis/relations.h"

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.h"
#include "tempaxis/error.h"

namespace tempaxis {
namespace {

constexpr PointRelation B = PointRelation::kBefore;
constexpr PointRelation A = PointRelation::kAfter;
constexpr PointRelation E = PointRelation::kEqual;
constexpr PointRelation V = PointRelation::kVague;

TEST_CASE("decomposition agrees with endpoint comparisons on every realization") {
  std::set<IntervalRelation> realized;
  for (const auto &x : oracle::Intervals(3)) {
    for (const auto &y : oracle::Intervals(3)) {
      const IntervalRelation rel = oracle::Allen(x.s, x.e, y.s, y.e);
      realized.insert(rel);
      const PointQuad q = DecomposeIntervalRelation(rel);
      CHECK(q.ss == oracle::Compare(x.s, y.s));
      CHECK(q.se == oracle::Compare(x.s, y.e));
      CHECK(q.es == oracle::Compare(x.e, y.s));
      CHECK(q.ee == oracle::Compare(x.e, y.e));
      CHECK(ToStartPointRelation(rel) == oracle::Compare(x.s, y.s));
      CHECK(Inverse(rel) == oracle::Allen(y.s, y.e, x.s, x.e));
    }
  }
  CHECK(realized.size() == 13);
}

TEST_CASE("decomposition is injective") {
  std::set<std::tuple<PointRelation, PointRelation, PointRelation, PointRelation>> quads;
  for (IntervalRelation r : kAllenRelations) {
    const PointQuad q = DecomposeIntervalRelation(r);
    quads.insert({q.ss, q.se, q.es, q.ee});
  }
  CHECK(quads.size() == 13);
}

TEST_CASE("vague has no decomposition") {
  CHECK_THROWS_AS(DecomposeIntervalRelation(IntervalRelation::kVague), Error);
  CHECK(ToStartPointRelation(IntervalRelation::kVague) == V);
}

TEST_CASE("inverse mirrors the relation ordering") {
  for (std::size_t i = 0; i < kAllenRelations.size(); ++i) {
    CHECK(Inverse(kAllenRelations[i]) == kAllenRelations[12 - i]);
    CHECK(Inverse(Inverse(kAllenRelations[i])) == kAllenRelations[i]);
  }
  CHECK(Inverse(IntervalRelation::kVague) == IntervalRelation::kVague);
  CHECK(Inverse(B) == A);
  CHECK(Inverse(E) == E);
  CHECK(Inverse(V) == V);
}

TEST_CASE("includes maps to before on start points") {
  CHECK(ToStartPointRelation(IntervalRelation::kIncludes) == B);
  CHECK(ToStartPointRelation(IntervalRelation::kIncluded) == A);
  CHECK(ToStartPointRelation(IntervalRelation::kEqual) == E);
  CHECK(ToStartPointRelation(IntervalRelation::kStarts) == E);
}

TEST_CASE("composition matches the enumerated oracle on all 16 pairs") {
  for (PointRelation r1 : kPointRelations) {
    for (PointRelation r2 : kPointRelations) {
      CAPTURE(Name(r1));
      CAPTURE(Name(r2));
      CHECK(ComposePointRelations(r1, r2) == oracle::Compose(r1, r2));
    }
  }
  CHECK(ComposePointRelations(B, B) == B);
  CHECK(ComposePointRelations(B, A) == V);
  CHECK(ComposePointRelations(E, A) == A);
}

TEST_CASE("point order sets") {
  CHECK(PointOrderSet::Of(V).bits() == PointOrderSet::kAll);
  CHECK(PointOrderSet::Of(B).Inverse() == PointOrderSet::Of(A));
  CHECK(PointOrderSet(PointOrderSet::kLess | PointOrderSet::kSame).Collapse() == V);
  CHECK_FALSE(PointOrderSet(PointOrderSet::kLess | PointOrderSet::kSame).Exact().has_value());
  CHECK(PointOrderSet::Of(E).Exact() == E);
  CHECK(PointOrderSet::Of(V).Exact() == V);
}

TEST_CASE("skip rule: es = BEFORE forces the whole quad") {
  CHECK(CompleteQuad({V, V, B, V}) == PointQuad{B, B, B, B});
  CHECK(CompleteQuad({V, A, V, V}) == PointQuad{A, A, A, A});
}

TEST_CASE("complete_quad on the before/after partial quad") {
  // ss = BEFORE with ee = AFTER means interval 1 contains interval 2 from
  // the left, which also fixes se and es.
  const auto expected = oracle::CompleteQuad({B, V, V, A});
  REQUIRE(expected.has_value());
  CHECK(*expected == PointQuad{B, B, A, A});
  CHECK(CompleteQuad({B, V, V, A}) == *expected);
}

TEST_CASE("complete_quad is unsatisfiable on contradictions") {
  // start1 < start2 <= end2 < start1.
  CHECK_FALSE(oracle::CompleteQuad({B, A, V, V}).has_value());
  try {
    CompleteQuad({B, A, V, V});
    FAIL("expected UNSATISFIABLE");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnsatisfiable);
  }
}

TEST_CASE("complete_quad agrees with the oracle on every partial quad") {
  int satisfiable = 0;
  for (PointRelation ss : kPointRelations)
    for (PointRelation se : kPointRelations)
      for (PointRelation es : kPointRelations)
        for (PointRelation ee : kPointRelations) {
          const PointQuad partial{ss, se, es, ee};
          const auto expected = oracle::CompleteQuad(partial);
          if (!expected) {
            CHECK_THROWS_AS(CompleteQuad(partial), Error);
            continue;
          }
          ++satisfiable;
          CHECK(CompleteQuad(partial) == *expected);
        }
  CHECK(satisfiable > 13);
}

TEST_CASE("complete_quad on a realized quad with one coordinate hidden") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 500; ++trial) {
    const IntervalRelation rel = kAllenRelations[gen() % 13];
    PointQuad q = DecomposeIntervalRelation(rel);
    const PointQuad full = q;
    switch (gen() % 4) {
      case 0: q.ss = V; break;
      case 1: q.se = V; break;
      case 2: q.es = V; break;
      default: q.ee = V; break;
    }
    // The hidden coordinate is recovered or left VAGUE, never contradicted.
    const PointQuad completed = CompleteQuad(q);
    CHECK(oracle::Allows(completed.ss, full.ss));
    CHECK(oracle::Allows(completed.se, full.se));
    CHECK(oracle::Allows(completed.es, full.es));
    CHECK(oracle::Allows(completed.ee, full.ee));
  }
}

TEST_CASE("Q1/Q2 mapping is a bijection") {
  const AnswerPair yy{Answer::kYes, Answer::kYes}, nn{Answer::kNo, Answer::kNo};
  const AnswerPair yn{Answer::kYes, Answer::kNo}, ny{Answer::kNo, Answer::kYes};
  CHECK(AnswersToRelation(yy) == V);
  CHECK(AnswersToRelation(nn) == E);
  CHECK(AnswersToRelation(yn) == B);
  CHECK(AnswersToRelation(ny) == A);
  std::set<PointRelation> images;
  for (const AnswerPair &p : {yy, nn, yn, ny}) {
    images.insert(AnswersToRelation(p));
    CHECK(RelationToAnswers(AnswersToRelation(p)) == p);
  }
  CHECK(images.size() == 4);
  for (PointRelation r : kPointRelations) CHECK(AnswersToRelation(RelationToAnswers(r)) == r);
}

TEST_CASE("names and parsing") {
  CHECK(ShortLabel(B) == "b");
  CHECK(Name(V) == "VAGUE");
  CHECK(ParsePointRelation("before") == B);
  CHECK(ParsePointRelation("E") == E);
  CHECK_FALSE(ParsePointRelation("sometimes").has_value());
  for (IntervalRelation r : kAllenRelations) CHECK(ParseIntervalRelation(Name(r)) == r);
  CHECK(Name(IntervalRelation::kImmediatelyAfter) == "IMMEDIATELY_AFTER");
}

}  // namespace
}  // namespace tempaxis
