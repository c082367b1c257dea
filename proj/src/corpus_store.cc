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

#include "json.hpp"
#include "tempaxis/error.h"
#include "tempaxis/file_util.h"

namespace tempaxis {
namespace {

using json = nlohmann::json;

}  // namespace

std::string SaveCorpus(const std::vector<Document> &documents) {
  json docs = json::array();
  for (const Document &doc : documents) {
    json tokens = json::array();
    for (const Token &t : doc.tokens) tokens.push_back(json::array({t.surface, t.pos, t.sentence}));
    json events = json::array();
    for (const Event &e : doc.events) {
      events.push_back({{"eid", e.eid},
                        {"eiid", e.eiid},
                        {"token", e.token_offset},
                        {"category", std::string(Name(e.category))},
                        {"aspect", e.aspect},
                        {"modality", e.modality},
                        {"polarity", e.polarity == Polarity::kNeg ? "NEG" : "POS"},
                        {"pos", e.pos_tag}});
    }
    docs.push_back({{"doc_id", doc.doc_id},
                    {"source", doc.source},
                    {"tokens", tokens},
                    {"events", events}});
  }
  json root;
  root["format"] = "tempaxis-corpus";
  root["version"] = 1;
  root["documents"] = docs;
  return root.dump(1) + "\n";
}

std::vector<Document> LoadCorpus(std::string_view text, const std::string &source) {
  std::vector<Document> out;
  try {
    const json root = json::parse(text);
    for (const json &d : root.at("documents")) {
      Document doc;
      doc.doc_id = d.at("doc_id").get<std::string>();
      doc.source = d.value("source", "");
      for (const json &t : d.at("tokens")) {
        doc.tokens.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                              t.at(2).get<int>()});
      }
      for (const json &e : d.at("events")) {
        Event event;
        event.eid = e.at("eid").get<std::string>();
        event.eiid = e.at("eiid").get<std::string>();
        event.token_offset = e.at("token").get<std::size_t>();
        const auto category = ParseEventCategory(e.at("category").get<std::string>());
        if (!category) throw Error(ErrorCode::kParseError, source + ": bad category in " + doc.doc_id);
        event.category = *category;
        event.aspect = e.value("aspect", "NONE");
        event.modality = e.value("modality", "NONE");
        event.polarity = e.value("polarity", "POS") == "NEG" ? Polarity::kNeg : Polarity::kPos;
        event.pos_tag = e.value("pos", "VERB");
        doc.events.push_back(std::move(event));
      }
      ValidateDocument(doc);
      out.push_back(std::move(doc));
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kParseError, source + ": " + e.what());
  }
  return out;
}

void ApplyPosSidecar(std::string_view text, std::vector<Document> &documents,
                     const std::string &source) {
  std::map<std::string, Document *> by_id;
  for (Document &d : documents) by_id[d.doc_id] = &d;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto fields = SplitTabs(line);
    if (fields.size() != 4) {
      throw Error(ErrorCode::kColumnCount, where + ": expected 4 columns");
    }
    auto it = by_id.find(UnescapeField(fields[0]));
    if (it == by_id.end()) continue;
    long long index = 0;
    if (!ParseInt(fields[1], &index) || index < 0 ||
        static_cast<std::size_t>(index) >= it->second->tokens.size()) {
      throw Error(ErrorCode::kParseError, where + ": bad token index");
    }
    Token &token = it->second->tokens[static_cast<std::size_t>(index)];
    if (token.surface != UnescapeField(fields[2])) {
      throw Error(ErrorCode::kParseError, where + ": surface '" + std::string(fields[2]) +
                                              "' does not match token '" + token.surface + "'");
    }
    token.pos = UnescapeField(fields[3]);
  }
}

std::string ExportPosSidecar(const std::vector<Document> &documents) {
  std::string out;
  for (const Document &doc : documents) {
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      out += EscapeField(doc.doc_id) + '\t' + std::to_string(i) + '\t' +
             EscapeField(doc.tokens[i].surface) + '\t' + EscapeField(doc.tokens[i].pos) + '\n';
    }
  }
  return out;
}

std::map<std::string, std::vector<AxisAssignment>> LoadAxisAssignments(
    std::string_view text, const std::string &source) {
  std::map<std::string, std::vector<AxisAssignment>> out;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty() || line.front() == '#') continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto fields = SplitTabs(line);
    if (fields.size() != 3 && fields.size() != 4) {
      throw Error(ErrorCode::kColumnCount, where + ": expected 3 or 4 columns");
    }
    const auto category = ParseEventCategory(Trim(fields[2]));
    if (!category) {
      throw Error(ErrorCode::kUnknownLabel,
                  where + ": unknown category '" + std::string(fields[2]) + "'");
    }
    std::string anchor = fields.size() == 4 ? Trim(fields[3]) : "";
    if (anchor == "-") anchor.clear();
    try {
      out[UnescapeField(fields[0])].push_back(
          AssignAxis(UnescapeField(fields[1]), *category, anchor));
    } catch (const Error &e) {
      throw Error(ErrorCode::kParseError, where + ": " + e.what());
    }
  }
  return out;
}

std::string ExportPairs(const std::vector<EventPair> &pairs) {
  std::string out;
  for (const EventPair &p : pairs) {
    out += EscapeField(p.doc_id) + '\t' + EscapeField(p.first) + '\t' + EscapeField(p.second) + '\n';
  }
  return out;
}

std::vector<EventPair> LoadPairs(std::string_view text, const std::string &source) {
  std::vector<EventPair> out;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() != 3) {
      throw Error(ErrorCode::kColumnCount,
                  source + ":" + std::to_string(line_no) + ": expected 3 columns");
    }
    out.push_back({UnescapeField(fields[1]), UnescapeField(fields[2]), UnescapeField(fields[0])});
  }
  return out;
}

std::vector<std::string> LoadDocumentList(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view line : SplitLines(text)) {
    std::string id = Trim(line);
    if (id.empty() || id.front() == '#') continue;
    out.push_back(std::move(id));
  }
  return out;
}

}  // namespace tempaxis
