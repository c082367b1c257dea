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

#include "tempaxis/corpus_store.h"

#include "doctest.h"
#include "tempaxis/error.h"
#include "tempaxis/file_util.h"
#include "tempaxis/pos_tagger.h"
#include "tempaxis/timeml.h"
#include "test_util.h"

namespace tempaxis {
namespace {

std::vector<Document> Fixtures() {
  std::vector<Document> docs;
  for (const char *name : {"fx01", "fx02", "fx03"}) {
    docs.push_back(
        ParseTimeml(ReadFile(testutil::DataPath(std::string("e2e/timeml/") + name + ".tml")))
            .document);
  }
  return docs;
}

TEST_CASE("corpus round trip") {
  std::vector<Document> docs = Fixtures();
  docs[1].events[0].polarity = Polarity::kNeg;
  docs[1].events[0].category = EventCategory::kNegation;
  docs[0].tokens[0].pos = "DT";
  const std::string text = SaveCorpus(docs);
  const std::vector<Document> back = LoadCorpus(text);
  REQUIRE(back.size() == docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    CHECK(back[i].doc_id == docs[i].doc_id);
    CHECK(back[i].tokens == docs[i].tokens);
    CHECK(back[i].events == docs[i].events);
  }
  CHECK(SaveCorpus(back) == text);
}

TEST_CASE("corpus parse errors") {
  CHECK_THROWS_AS(LoadCorpus("{not json"), Error);
  CHECK_THROWS_AS(LoadCorpus("{\"documents\": 3}"), Error);
}

TEST_CASE("POS sidecar") {
  std::vector<Document> docs = Fixtures();
  for (Document &d : docs) TagMissing(d);
  const std::string sidecar = ExportPosSidecar(docs);
  std::vector<Document> fresh = Fixtures();
  ApplyPosSidecar(sidecar, fresh);
  for (std::size_t i = 0; i < docs.size(); ++i) CHECK(fresh[i].tokens == docs[i].tokens);

  const std::string &doc = docs[0].doc_id;
  try {
    ApplyPosSidecar(doc + "\t0\tNotTheWord\tNN\n", fresh, "tags.tsv");
    FAIL("expected PARSE_ERROR");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("tags.tsv:1") != std::string::npos);
  }
  CHECK_THROWS_AS(ApplyPosSidecar(doc + "\t0\tNN\n", fresh), Error);
  CHECK_THROWS_AS(ApplyPosSidecar(doc + "\t9999\tx\tNN\n", fresh), Error);
}

TEST_CASE("axis assignments") {
  const auto axes = LoadAxisAssignments(
      "# comment\n"
      "d1\tei1\tMAIN\n"
      "d1\tei2\tINTENTION\tei1\n"
      "d1\tei3\tNEGATION\t-\n");
  const auto &d1 = axes.at("d1");
  REQUIRE(d1.size() == 3);
  CHECK(d1[0].axis == Axis::Main());
  CHECK(d1[1].axis == Axis::Orthogonal("ei1"));
  CHECK_FALSE(d1[2].anchorable_on_main);
  CHECK_THROWS_AS(LoadAxisAssignments("d1\tei2\tINTENTION\n"), Error);
  CHECK_THROWS_AS(LoadAxisAssignments("d1\tei2\tDREAM\n"), Error);
}

TEST_CASE("pairs and document lists") {
  const std::vector<EventPair> pairs = {{"ei1", "ei2", "d"}, {"ei1", "ei3", "d"}};
  CHECK(LoadPairs(ExportPairs(pairs)) == pairs);
  CHECK_THROWS_AS(LoadPairs("d\tei1\n"), Error);
  CHECK(LoadDocumentList("a\n\n# skip\nb\n") == std::vector<std::string>{"a", "b"});
}

}  // namespace
}  // namespace tempaxis
