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

#ifndef TEMPAXIS_WORDNET_H_
#define TEMPAXIS_WORDNET_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

// Verb lexicon backed by the WordNet dictionary files.
//
// Reads index.verb and data.verb (both required), verb.exc for irregular
// inflections and data.noun to resolve derivational pointers into nouns
// (both optional). Lemmas are lower case with '_' joining multiword forms.

namespace tempaxis {

class WordNetIndex {
 public:
  // Verb synset ids ("v" + 8-digit offset) for a lemma, in sense order.
  const std::vector<std::string> &Synsets(std::string_view lemma) const;
  // Lemmas in a verb synset.
  const std::set<std::string> &Members(std::string_view synset) const;

  bool SharesSynset(std::string_view a, std::string_view b) const;

  // Lemmas reachable through one derivational pointer. Links are
  // symmetric; verb and noun forms share one lemma namespace.
  const std::set<std::string> &DerivationalLinks(std::string_view lemma) const;
  // Direct link, or a common derivational neighbour (two verbs derived from
  // the same noun).
  bool DerivationallyRelated(std::string_view a, std::string_view b) const;

  // Verb base form: exception list, then the standard detachment rules;
  // returns the lower-cased word when nothing matches.
  std::string Lemmatize(std::string_view word) const;

  bool empty() const { return synsets_.empty(); }
  std::size_t lemma_count() const { return synsets_.size(); }

  // Construction, used by the loader and by tests.
  void AddSense(const std::string &lemma, const std::string &synset);
  void AddDerivation(const std::string &a, const std::string &b);
  void AddException(const std::string &inflected, const std::string &base);

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> synsets_;
  std::map<std::string, std::set<std::string>, std::less<>> members_;
  std::map<std::string, std::set<std::string>, std::less<>> derivations_;
  std::map<std::string, std::string, std::less<>> exceptions_;
};

// Throws kMissingFile when a required file is absent and kParseError with
// the file name and byte offset of the bad record.
WordNetIndex LoadWordNet(const std::string &directory);

}  // namespace tempaxis

#endif  // TEMPAXIS_WORDNET_H_
