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

#ifndef TEMPAXIS_POS_TAGGER_H_
#define TEMPAXIS_POS_TAGGER_H_

#include <string>
#include <string_view>
#include <vector>

#include "tempaxis/multiaxis.h"

namespace tempaxis {

// Small closed-class lexicon plus suffix rules producing Penn-style tags.
// Only meant to let fixtures run without a tagged corpus; a POS sidecar
// always takes precedence.
std::string FallbackTag(std::string_view word);

// Tags every token whose tag is empty; verb event tokens end up with a VB*
// tag. Returns the number of tokens tagged.
int TagMissing(Document &doc);

bool IsPrepositionTag(std::string_view tag);

}  // namespace tempaxis

#endif  // TEMPAXIS_POS_TAGGER_H_
