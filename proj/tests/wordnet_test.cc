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

#include "tempaxis/wordnet.h"

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "tempaxis/error.h"
#include "test_util.h"

namespace tempaxis {
namespace {

const WordNetIndex &Fixture() {
  static const WordNetIndex index = LoadWordNet(testutil::DataPath("wordnet"));
  return index;
}

TEST_CASE("synsets") {
  const WordNetIndex &wn = Fixture();
  CHECK_FALSE(wn.empty());
  CHECK(wn.Synsets("strike").size() == 2);
  CHECK(wn.Synsets("levitate").empty());
  CHECK(wn.SharesSynset("hit", "strike"));
  CHECK(wn.SharesSynset("strike", "hit"));
  CHECK(wn.SharesSynset("say", "state"));
  CHECK(wn.SharesSynset("flee", "take_flight"));
  CHECK_FALSE(wn.SharesSynset("strike", "say"));
  CHECK_FALSE(wn.SharesSynset("levitate", "levitate"));
  for (const std::string &id : wn.Synsets("arrest")) {
    CHECK(id[0] == 'v');
    CHECK(wn.Members(id).count("arrest") == 1);
  }
}

TEST_CASE("derivational links are symmetric") {
  const WordNetIndex &wn = Fixture();
  CHECK(wn.DerivationalLinks("invade").count("invasion") == 1);
  CHECK(wn.DerivationalLinks("invasion").count("invade") == 1);
  CHECK(wn.DerivationallyRelated("destroy", "destruction"));
  CHECK(wn.DerivationallyRelated("destruction", "destroy"));
  // attack and assault both derive from the noun "attack".
  CHECK(wn.DerivationallyRelated("assault", "attack"));
  CHECK_FALSE(wn.DerivationallyRelated("invade", "announce"));
}

TEST_CASE("lemmatization") {
  const WordNetIndex &wn = Fixture();
  CHECK(wn.Lemmatize("fled") == "flee");
  CHECK(wn.Lemmatize("struck") == "strike");
  CHECK(wn.Lemmatize("Said") == "say");
  CHECK(wn.Lemmatize("invaded") == "invade");
  CHECK(wn.Lemmatize("attacks") == "attack");
  CHECK(wn.Lemmatize("searching") == "search");
  CHECK(wn.Lemmatize("zorbled") == "zorbled");
}

TEST_CASE("in-memory construction") {
  WordNetIndex wn;
  CHECK(wn.empty());
  wn.AddSense("go", "v1");
  wn.AddSense("leave", "v1");
  wn.AddDerivation("go", "goer");
  wn.AddException("went", "go");
  CHECK(wn.SharesSynset("go", "leave"));
  CHECK(wn.DerivationallyRelated("goer", "go"));
  CHECK(wn.Lemmatize("went") == "go");
  CHECK(wn.lemma_count() == 2);
}

TEST_CASE("loader errors") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "tempaxis_wordnet_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  try {
    LoadWordNet(dir.string());
    FAIL("expected MISSING_FILE");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMissingFile);
  }
  fs::copy_file(testutil::DataPath("wordnet/index.verb"), dir / "index.verb");
  {
    std::ofstream out(dir / "data.verb");
    out << "  license line\n00000031 29 v zz strike 0 000 | broken\n";
  }
  try {
    LoadWordNet(dir.string());
    FAIL("expected PARSE_ERROR");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(std::string(e.what()).find("data.verb") != std::string::npos);
    CHECK(std::string(e.what()).find("offset 15") != std::string::npos);
  }
  fs::remove_all(dir);
}

}  // namespace
}  // namespace tempaxis
