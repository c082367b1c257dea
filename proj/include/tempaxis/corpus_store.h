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

#ifndef TEMPAXIS_CORPUS_STORE_H_
#define TEMPAXIS_CORPUS_STORE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tempaxis/multiaxis.h"

namespace tempaxis {

// Internal corpus file: a JSON document {"documents": [...]} holding tokens
// ([surface, pos, sentence]) and events for each document.
std::string SaveCorpus(const std::vector<Document> &documents);
std::vector<Document> LoadCorpus(std::string_view text, const std::string &source = "<corpus>");

// POS sidecar, one token per line:
//   doc_id TAB token_index TAB surface TAB pos
// Tags are written into the matching documents. kParseError when the
// surface does not match the token at that index.
void ApplyPosSidecar(std::string_view text, std::vector<Document> &documents,
                     const std::string &source = "<pos>");
std::string ExportPosSidecar(const std::vector<Document> &documents);

// Axis assignments: doc_id TAB eiid TAB category [TAB anchor_eiid]. A "-"
// anchor means none. Keyed by doc_id.
std::map<std::string, std::vector<AxisAssignment>> LoadAxisAssignments(
    std::string_view text, const std::string &source = "<axes>");

// doc_id TAB eiid1 TAB eiid2
std::string ExportPairs(const std::vector<EventPair> &pairs);
std::vector<EventPair> LoadPairs(std::string_view text, const std::string &source = "<pairs>");

// One document id per line; blank lines and '#' comments ignored.
std::vector<std::string> LoadDocumentList(std::string_view text);

}  // namespace tempaxis

#endif  // TEMPAXIS_CORPUS_STORE_H_
