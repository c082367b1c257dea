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

#include "tempaxis/features.h"

#include <algorithm>

#include "doctest.h"
#include "tempaxis/error.h"
#include "tempaxis/pos_tagger.h"
#include "test_util.h"

namespace tempaxis {
namespace {

using testutil::MakeDoc;

bool Has(const FeatureVector &v, const std::string &name) {
  return std::any_of(v.features.begin(), v.features.end(),
                     [&](const auto &f) { return f.first == name; });
}

Document Tagged(const std::string &id, const std::vector<std::string> &sentences) {
  Document d = MakeDoc(id, sentences);
  TagMissing(d);
  return d;
}

TEST_CASE("adjacent events in one sentence") {
  const Document d = Tagged("d", {"Troops *attacked *destroyed the town ."});
  const FeatureVector v = ExtractFeatures({"ei1", "ei2", "d"}, d, WordNetIndex());
  CHECK(Has(v, "tokdist=1"));
  CHECK(Has(v, "sentdist=0"));
  CHECK(Has(v, "pos1[-2]=PAD"));
  CHECK(Has(v, "pos1[-1]=" + d.tokens[0].pos));
  CHECK(Has(v, "prep1=NONE"));
  CHECK(std::is_sorted(v.features.begin(), v.features.end()));
}

TEST_CASE("modal between mentions") {
  const Document d = Tagged("d", {"He *said they will *leave ."});
  const FeatureVector v = ExtractFeatures({"ei1", "ei2", "d"}, d, WordNetIndex());
  CHECK(Has(v, "modal=will"));
  CHECK(Has(v, "tokdist=3"));
  CHECK_FALSE(Has(v, "conn=before"));
}

TEST_CASE("connectives, far pairs and sentence distance") {
  const Document d =
      Tagged("d", {"They *left before the long cold storm *hit .", "Officials *spoke ."});
  CHECK(Has(ExtractFeatures({"ei1", "ei2", "d"}, d, WordNetIndex()), "conn=before"));
  const FeatureVector far = ExtractFeatures({"ei1", "ei3", "d"}, d, WordNetIndex());
  CHECK(Has(far, "tokdist=5+"));
  CHECK(Has(far, "sentdist=1"));
  CHECK(Has(far, "pos2[-2]=PAD"));
}

TEST_CASE("preposition within reach") {
  const Document d = Tagged("d", {"After the long *meeting , they *left ."});
  const FeatureVector v = ExtractFeatures({"ei1", "ei2", "d"}, d, WordNetIndex());
  CHECK(Has(v, "prep1=after"));
  const Document far = Tagged("d", {"In a b c d e *went and *came"});
  CHECK(Has(ExtractFeatures({"ei1", "ei2", "d"}, far, WordNetIndex()), "prep1=NONE"));
}

TEST_CASE("WordNet features") {
  WordNetIndex wn;
  wn.AddSense("strike", "v1");
  wn.AddSense("hit", "v1");
  wn.AddException("struck", "strike");
  wn.AddDerivation("invade", "invasion");
  const Document d = Tagged("d", {"Storms *struck and *hit and *invaded ."});
  CHECK(Has(ExtractFeatures({"ei1", "ei2", "d"}, d, wn), "synonym"));
  CHECK_FALSE(Has(ExtractFeatures({"ei1", "ei3", "d"}, d, wn), "synonym"));
}

TEST_CASE("event properties") {
  Document d = Tagged("d", {"*a *b"});
  d.events[0].polarity = Polarity::kNeg;
  d.events[1].aspect = "PROGRESSIVE";
  const FeatureVector v = ExtractFeatures({"ei1", "ei2", "d"}, d, WordNetIndex());
  CHECK(Has(v, "polarity1=NEG"));
  CHECK(Has(v, "aspect2=PROGRESSIVE"));
  CHECK(Has(v, "modality1=NONE"));
}

TEST_CASE("errors") {
  const Document untagged = MakeDoc("d", {"*a *b"});
  try {
    ExtractFeatures({"ei1", "ei2", "d"}, untagged, WordNetIndex());
    FAIL("expected MISSING_POS");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMissingPos);
  }
  CHECK_THROWS_AS(ExtractFeatures({"ei1", "ei9", "d"}, Tagged("d", {"*a *b"}), WordNetIndex()),
                  Error);
}

TEST_CASE("lookup by eid and determinism") {
  const Document d = Tagged("d", {"Prices *rose after rates *fell ."});
  const FeatureVector a = ExtractFeatures({"e1", "e2", "d"}, d, WordNetIndex());
  CHECK(a == ExtractFeatures({"ei1", "ei2", "d"}, d, WordNetIndex()));
  for (const auto &[name, value] : a.features) CHECK(value == 1.0);
}

TEST_CASE("fallback tagger") {
  CHECK(FallbackTag("the") == "DT");
  CHECK(IsPrepositionTag(FallbackTag("after")));
  CHECK(FallbackTag("quickly") == "RB");
  Document d = MakeDoc("d", {"They *rain"});
  CHECK(TagMissing(d) == 2);
  CHECK(d.tokens[1].pos.rfind("VB", 0) == 0);
  CHECK(IsPrepositionTag("ADP"));
  CHECK_FALSE(IsPrepositionTag("NN"));
}

}  // namespace
}  // namespace tempaxis
