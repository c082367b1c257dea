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

#ifndef TEMPAXIS_TIMEML_H_
#define TEMPAXIS_TIMEML_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tempaxis/multiaxis.h"

namespace tempaxis {

// An element kept verbatim but not interpreted (TLINK, TIMEX3, SLINK, ...).
struct OpaqueElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;
};

struct TimemlOptions {
  // Drop events whose instance is not tagged pos="VERB".
  bool verbs_only = true;
};

struct ParsedTimeml {
  Document document;
  std::vector<OpaqueElement> metadata;
  std::vector<std::string> warnings;
};

// Parses a TimeML document. Text inside TEXT (or the root when there is no
// TEXT element) is tokenized on whitespace with leading and trailing
// punctuation split off; token boundaries are also forced at EVENT
// boundaries. Sentences come from <s> elements when present, otherwise from
// sentence-final punctuation tokens. The document id is the DOCID element's
// text, else `fallback_doc_id`.
//
// Throws kMalformedXml, and kDanglingInstance for a MAKEINSTANCE whose
// eventID names no EVENT.
ParsedTimeml ParseTimeml(std::string_view xml, const std::string &fallback_doc_id = "",
                         const TimemlOptions &options = {});

// Splits one whitespace-free chunk into tokens (exposed for tests).
std::vector<std::string> SplitPunctuation(std::string_view chunk);

}  // namespace tempaxis

#endif  // TEMPAXIS_TIMEML_H_
