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

#include "tempaxis/multiaxis.h"

#include <set>

#include "doctest.h"
#include "tempaxis/error.h"
#include "test_util.h"

namespace tempaxis {
namespace {

using testutil::MakeDoc;

TEST_CASE("categories map to axes") {
  CHECK(ClassifyAxis(EventCategory::kMainCandidate).kind == AxisKind::kMain);
  CHECK(ClassifyAxis(EventCategory::kIntention).kind == AxisKind::kOrthogonal);
  CHECK(ClassifyAxis(EventCategory::kOpinion).kind == AxisKind::kOrthogonal);
  CHECK(ClassifyAxis(EventCategory::kHypothesis) ==
        AxisDisposition{AxisKind::kParallel, ParallelKind::kHypothesis});
  CHECK(ClassifyAxis(EventCategory::kGeneric) ==
        AxisDisposition{AxisKind::kParallel, ParallelKind::kGeneric});
  CHECK(ClassifyAxis(EventCategory::kNegation).kind == AxisKind::kNone);
  CHECK(ClassifyAxis(EventCategory::kStatic).kind == AxisKind::kOther);
  CHECK(ClassifyAxis(EventCategory::kRecurrent).kind == AxisKind::kOther);
}

TEST_CASE("only main-axis events are anchorable on the main axis") {
  int anchorable = 0;
  for (int i = 0; i <= static_cast<int>(EventCategory::kRecurrent); ++i) {
    const auto c = static_cast<EventCategory>(i);
    const AxisAssignment a = AssignAxis("ei1", c, "ei0");
    anchorable += a.anchorable_on_main;
    CHECK(a.anchorable_on_main == (c == EventCategory::kMainCandidate));
  }
  CHECK(anchorable == 1);
}

TEST_CASE("orthogonal assignment needs an anchor") {
  CHECK_THROWS_AS(AssignAxis("ei2", EventCategory::kIntention), Error);
  CHECK(AssignAxis("ei2", EventCategory::kIntention, "ei1").axis == Axis::Orthogonal("ei1"));
}

TEST_CASE("category names round trip") {
  for (int i = 0; i <= static_cast<int>(EventCategory::kRecurrent); ++i) {
    const auto c = static_cast<EventCategory>(i);
    CHECK(ParseEventCategory(Name(c)) == c);
  }
  CHECK(ParseEventCategory("main") == EventCategory::kMainCandidate);
  CHECK_FALSE(ParseEventCategory("IMAGINED").has_value());
}

TEST_CASE("pairs within a two-sentence window") {
  const Document doc = MakeDoc("d", {"A *ran and *fell .", "B *left .", "C *came ."});
  const auto pairs = GeneratePairs(doc, {"ei1", "ei2", "ei3", "ei4"});
  // Oracle: every i < j with sentence gap < 2.
  std::set<std::pair<std::string, std::string>> expected;
  for (const Event &a : doc.events) {
    for (const Event &b : doc.events) {
      if (a.token_offset < b.token_offset && doc.SentenceOf(b) - doc.SentenceOf(a) < 2) {
        expected.insert({a.eiid, b.eiid});
      }
    }
  }
  std::set<std::pair<std::string, std::string>> got;
  for (const EventPair &p : pairs) got.insert({p.first, p.second});
  CHECK(got == expected);
  CHECK(pairs.size() == 4);
  CHECK(pairs.front() == EventPair{"ei1", "ei2", "d"});
}

TEST_CASE("window of one keeps same-sentence pairs only") {
  const Document doc = MakeDoc("d", {"*a *b", "*c"});
  CHECK(GeneratePairs(doc, {"ei1", "ei2", "ei3"}, 1).size() == 1);
  CHECK_THROWS_AS(GeneratePairs(doc, {"ei1"}, 0), Error);
  CHECK_THROWS_AS(GeneratePairs(doc, {"ei9"}), Error);
}

TEST_CASE("pair order follows text order, not input order") {
  const Document doc = MakeDoc("d", {"*a *b *c"});
  const auto pairs = GeneratePairs(doc, {"ei3", "ei1", "ei2"});
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == EventPair{"ei1", "ei2", "d"});
  CHECK(pairs[1] == EventPair{"ei1", "ei3", "d"});
  CHECK(pairs[2] == EventPair{"ei2", "ei3", "d"});
}

TEST_CASE("anchorable events and axis members") {
  const Document doc = MakeDoc("d", {"*said they *plan to *visit", "it *might *rain"});
  const std::vector<AxisAssignment> axes = {
      AssignAxis("ei1", EventCategory::kMainCandidate),
      AssignAxis("ei2", EventCategory::kMainCandidate),
      AssignAxis("ei3", EventCategory::kIntention, "ei2"),
      AssignAxis("ei4", EventCategory::kNegation),
      AssignAxis("ei5", EventCategory::kHypothesis),
  };
  CHECK(AnchorableEvents(doc, Axis::Main(), axes) == std::vector<std::string>{"ei1", "ei2"});
  CHECK(AnchorableEvents(doc, Axis::Orthogonal("ei2"), axes) == std::vector<std::string>{"ei3"});
  CHECK(AxisMembers(doc, Axis::Orthogonal("ei2"), axes) ==
        std::vector<std::string>{"ei2", "ei3"});
  CHECK(AnchorableEvents(doc, Axis::Parallel(ParallelKind::kHypothesis), axes) ==
        std::vector<std::string>{"ei5"});
  std::vector<AxisAssignment> partial(axes.begin(), axes.begin() + 2);
  try {
    AnchorableEvents(doc, Axis::Main(), partial);
    FAIL("expected MISSING_ASSIGNMENT");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMissingAssignment);
  }
}

TEST_CASE("document validation") {
  Document doc = MakeDoc("d", {"*a b", "c"});
  CHECK_NOTHROW(ValidateDocument(doc));
  doc.events[0].token_offset = 10;
  CHECK_THROWS_AS(ValidateDocument(doc), Error);
  Document bad = MakeDoc("d", {"a", "b"});
  bad.tokens[1].sentence = -1;
  CHECK_THROWS_AS(ValidateDocument(bad), Error);
}

}  // namespace
}  // namespace tempaxis
