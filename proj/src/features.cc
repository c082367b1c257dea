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
#include <array>
#include <cctype>
#include <cstdlib>

#include "tempaxis/error.h"
#include "tempaxis/pos_tagger.h"

namespace tempaxis {
namespace {

constexpr int kPosWindow = 3;
constexpr int kPrepositionReach = 5;
constexpr std::array<std::string_view, 6> kModals = {"will", "would", "can",
                                                     "could", "may", "might"};
constexpr std::array<std::string_view, 3> kConnectives = {"before", "after", "since"};

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

const std::string &TagAt(const Document &doc, std::size_t i) {
  const Token &token = doc.tokens[i];
  if (token.pos.empty()) {
    throw Error(ErrorCode::kMissingPos, doc.doc_id + ": token " + std::to_string(i) + " '" +
                                            token.surface + "' has no POS tag");
  }
  return token.pos;
}

void AddEventFeatures(const Document &doc, const Event &event, const std::string &k,
                      std::vector<std::pair<std::string, double>> &out) {
  const std::size_t at = event.token_offset;
  const int sentence = doc.tokens[at].sentence;
  for (int d = -kPosWindow; d <= kPosWindow; ++d) {
    const long long j = static_cast<long long>(at) + d;
    std::string tag = "PAD";
    if (j >= 0 && j < static_cast<long long>(doc.tokens.size()) &&
        doc.tokens[static_cast<std::size_t>(j)].sentence == sentence) {
      tag = TagAt(doc, static_cast<std::size_t>(j));
    }
    out.emplace_back("pos" + k + "[" + std::to_string(d) + "]=" + tag, 1.0);
  }

  std::string prep = "NONE";
  for (int d = 1; d <= kPrepositionReach && static_cast<std::size_t>(d) <= at; ++d) {
    const Token &t = doc.tokens[at - d];
    if (t.sentence != sentence) break;
    if (IsPrepositionTag(t.pos)) {
      prep = Lower(t.surface);
      break;
    }
  }
  out.emplace_back("prep" + k + "=" + prep, 1.0);
  out.emplace_back("aspect" + k + "=" + event.aspect, 1.0);
  out.emplace_back("modality" + k + "=" + event.modality, 1.0);
  out.emplace_back("polarity" + k + "=" + (event.polarity == Polarity::kNeg ? "NEG" : "POS"), 1.0);
}

}  // namespace

const Event *FindEventById(const Document &doc, const std::string &id) {
  if (const Event *e = doc.FindEvent(id)) return e;
  for (const Event &e : doc.events) {
    if (e.eid == id) return &e;
  }
  return nullptr;
}

FeatureVector ExtractFeatures(const EventPair &pair, const Document &doc,
                              const WordNetIndex &wordnet) {
  const Event *e1 = FindEventById(doc, pair.first);
  const Event *e2 = FindEventById(doc, pair.second);
  if (e1 == nullptr || e2 == nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                doc.doc_id + ": unknown event " + (e1 == nullptr ? pair.first : pair.second));
  }
  std::vector<std::pair<std::string, double>> out;
  AddEventFeatures(doc, *e1, "1", out);
  AddEventFeatures(doc, *e2, "2", out);

  const std::size_t lo = std::min(e1->token_offset, e2->token_offset);
  const std::size_t hi = std::max(e1->token_offset, e2->token_offset);
  out.emplace_back("sentdist=" + std::to_string(std::abs(doc.tokens[hi].sentence -
                                                         doc.tokens[lo].sentence)),
                   1.0);
  const std::size_t distance = hi - lo;
  out.emplace_back("tokdist=" + (distance >= 5 ? std::string("5+") : std::to_string(distance)),
                   1.0);
  for (std::size_t i = lo + 1; i < hi; ++i) {
    const std::string word = Lower(doc.tokens[i].surface);
    if (std::find(kModals.begin(), kModals.end(), word) != kModals.end()) {
      out.emplace_back("modal=" + word, 1.0);
    }
    if (std::find(kConnectives.begin(), kConnectives.end(), word) != kConnectives.end()) {
      out.emplace_back("conn=" + word, 1.0);
    }
  }

  const std::string lemma1 = wordnet.Lemmatize(doc.tokens[e1->token_offset].surface);
  const std::string lemma2 = wordnet.Lemmatize(doc.tokens[e2->token_offset].surface);
  if (wordnet.SharesSynset(lemma1, lemma2)) out.emplace_back("synonym", 1.0);
  if (wordnet.DerivationallyRelated(lemma1, lemma2)) out.emplace_back("derivation", 1.0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto &a, const auto &b) { return a.first == b.first; }),
            out.end());
  return FeatureVector{std::move(out)};
}

}  // namespace tempaxis
