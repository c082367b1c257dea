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

#include "tempaxis/pos_tagger.h"

#include <algorithm>
#include <cctype>
#include <map>

namespace tempaxis {
namespace {

const std::map<std::string, std::string, std::less<>> &Lexicon() {
  static const auto *lexicon = new std::map<std::string, std::string, std::less<>>{
      {"the", "DT"},      {"a", "DT"},        {"an", "DT"},       {"this", "DT"},
      {"that", "IN"},     {"these", "DT"},    {"those", "DT"},    {"some", "DT"},
      {"in", "IN"},       {"on", "IN"},       {"at", "IN"},       {"of", "IN"},
      {"for", "IN"},      {"with", "IN"},     {"by", "IN"},       {"from", "IN"},
      {"after", "IN"},    {"before", "IN"},   {"since", "IN"},    {"during", "IN"},
      {"until", "IN"},    {"about", "IN"},    {"into", "IN"},     {"over", "IN"},
      {"under", "IN"},    {"while", "IN"},    {"because", "IN"},  {"if", "IN"},
      {"to", "TO"},       {"and", "CC"},      {"or", "CC"},       {"but", "CC"},
      {"will", "MD"},     {"would", "MD"},    {"can", "MD"},      {"could", "MD"},
      {"may", "MD"},      {"might", "MD"},    {"shall", "MD"},    {"should", "MD"},
      {"must", "MD"},     {"he", "PRP"},      {"she", "PRP"},     {"it", "PRP"},
      {"they", "PRP"},    {"we", "PRP"},      {"i", "PRP"},       {"you", "PRP"},
      {"him", "PRP"},     {"her", "PRP$"},    {"them", "PRP"},    {"his", "PRP$"},
      {"its", "PRP$"},    {"their", "PRP$"},  {"is", "VBZ"},      {"are", "VBP"},
      {"was", "VBD"},     {"were", "VBD"},    {"be", "VB"},       {"been", "VBN"},
      {"has", "VBZ"},     {"have", "VBP"},    {"had", "VBD"},     {"not", "RB"},
      {"said", "VBD"},    {"also", "RB"},     {"then", "RB"},     {"when", "WRB"},
  };
  return *lexicon;
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

std::string FallbackTag(std::string_view word) {
  if (word.empty()) return "SYM";
  if (std::all_of(word.begin(), word.end(),
                  [](unsigned char c) { return std::ispunct(c) != 0; })) {
    return word == "," ? "," : word == "." || word == "!" || word == "?" ? "." : ":";
  }
  if (std::isdigit(static_cast<unsigned char>(word.front()))) return "CD";
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (auto it = Lexicon().find(lower); it != Lexicon().end()) return it->second;
  if (EndsWith(lower, "ing")) return "VBG";
  if (EndsWith(lower, "ed")) return "VBD";
  if (EndsWith(lower, "ly")) return "RB";
  if (EndsWith(lower, "ous") || EndsWith(lower, "ful") || EndsWith(lower, "ive") ||
      EndsWith(lower, "able")) {
    return "JJ";
  }
  if (std::isupper(static_cast<unsigned char>(word.front()))) return "NNP";
  if (EndsWith(lower, "s") && !EndsWith(lower, "ss")) return "NNS";
  return "NN";
}

int TagMissing(Document &doc) {
  int tagged = 0;
  for (Token &token : doc.tokens) {
    if (!token.pos.empty()) continue;
    token.pos = FallbackTag(token.surface);
    ++tagged;
  }
  // Verb events are known verbs whatever their suffix says.
  for (const Event &e : doc.events) {
    std::string &tag = doc.tokens[e.token_offset].pos;
    if (e.pos_tag == "VERB" && tag.rfind("VB", 0) != 0) tag = "VB";
  }
  return tagged;
}

bool IsPrepositionTag(std::string_view tag) { return tag == "IN" || tag == "ADP"; }

}  // namespace tempaxis
