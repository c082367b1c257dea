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

#ifndef TEMPAXIS_FEATURES_H_
#define TEMPAXIS_FEATURES_H_

#include <string>
#include <utility>
#include <vector>

#include "tempaxis/multiaxis.h"
#include "tempaxis/wordnet.h"

namespace tempaxis {

// Named features sorted by name, no duplicates. Indicator features carry
// value 1.
struct FeatureVector {
  std::vector<std::pair<std::string, double>> features;

  bool operator==(const FeatureVector &) const = default;
};

// Event by instance id, falling back to the event id.
const Event *FindEventById(const Document &doc, const std::string &id);

// Features of an event pair:
//   pos1[-3..3], pos2[-3..3]  tags around each event, PAD past the sentence
//   sentdist, tokdist          token distance bucketed 0..4 and 5+
//   modal=*, conn=*            modals and temporal connectives between them
//   synonym, derivation        WordNet relations of the two verb lemmas
//   prep1, prep2               nearest preposition at most 5 tokens to the
//                              left in the same sentence, or NONE
//   aspect*, modality*, polarity*
// Throws kInvalidArgument for an unknown event and kMissingPos when a token
// in either window has no tag.
FeatureVector ExtractFeatures(const EventPair &pair, const Document &doc,
                              const WordNetIndex &wordnet);

}  // namespace tempaxis

#endif  // TEMPAXIS_FEATURES_H_
