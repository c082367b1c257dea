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

#include "tempaxis/timeml.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "tempaxis/error.h"
#include "tempaxis/file_util.h"
#include "tempaxis/xml_reader.h"

namespace tempaxis {
namespace {

struct Span {
  std::size_t begin;
  std::size_t end;
};

struct EventMention {
  std::string eid;
  Span span;
};

struct TextLayout {
  std::string plain;
  std::vector<EventMention> mentions;
  std::vector<std::size_t> sentence_starts;
};

bool IsPunct(char c) { return std::ispunct(static_cast<unsigned char>(c)) != 0; }
bool IsSpace(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Token spans within one chunk, relative to the chunk.
std::vector<Span> PunctuationSpans(std::string_view chunk) {
  std::vector<Span> leading, trailing;
  std::size_t begin = 0, end = chunk.size();
  while (end - begin > 1 && IsPunct(chunk[begin])) {
    leading.push_back({begin, begin + 1});
    ++begin;
  }
  while (end - begin > 1 && IsPunct(chunk[end - 1])) {
    // Keep the final period of abbreviations such as "U.S.", but not of
    // a number ending a sentence.
    if (chunk[end - 1] == '.') {
      const std::string_view body = chunk.substr(begin, end - 1 - begin);
      const bool alpha = std::any_of(body.begin(), body.end(), [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) != 0;
      });
      if (alpha && body.find('.') != std::string_view::npos) break;
    }
    trailing.push_back({end - 1, end});
    --end;
  }
  std::vector<Span> out = leading;
  if (end > begin) out.push_back({begin, end});
  out.insert(out.end(), trailing.rbegin(), trailing.rend());
  return out;
}

void Layout(const XmlNode &node, TextLayout &layout) {
  if (node.is_text()) {
    layout.plain += node.text;
    return;
  }
  if (node.name == "EVENT") {
    const std::string *eid = node.Attribute("eid");
    const std::size_t begin = layout.plain.size();
    for (const XmlNode &child : node.children) Layout(child, layout);
    if (eid != nullptr) layout.mentions.push_back({*eid, {begin, layout.plain.size()}});
    return;
  }
  if (node.name == "s") {
    layout.plain += ' ';
    layout.sentence_starts.push_back(layout.plain.size());
    for (const XmlNode &child : node.children) Layout(child, layout);
    layout.plain += ' ';
    return;
  }
  for (const XmlNode &child : node.children) Layout(child, layout);
}

const XmlNode *FindElement(const XmlNode &node, std::string_view name) {
  if (node.name == name) return &node;
  for (const XmlNode &child : node.children) {
    if (child.is_text()) continue;
    if (const XmlNode *found = FindElement(child, name)) return found;
  }
  return nullptr;
}

void CollectElements(const XmlNode &node, std::vector<const XmlNode *> &out) {
  if (node.is_text()) return;
  out.push_back(&node);
  for (const XmlNode &child : node.children) CollectElements(child, out);
}

std::string AttributeOr(const XmlNode &node, std::string_view key, std::string fallback) {
  const std::string *value = node.Attribute(key);
  return value != nullptr && !value->empty() ? *value : fallback;
}

std::string SynthesizeInstanceId(const std::string &eid, const std::set<std::string> &taken) {
  std::string base = "ei";
  if (eid.size() > 1 && eid[0] == 'e' &&
      std::all_of(eid.begin() + 1, eid.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    base += eid.substr(1);
  } else {
    base += eid;
  }
  std::string id = base;
  for (int n = 2; taken.count(id); ++n) id = base + "_" + std::to_string(n);
  return id;
}

}  // namespace

std::vector<std::string> SplitPunctuation(std::string_view chunk) {
  std::vector<std::string> out;
  for (const Span &s : PunctuationSpans(chunk)) {
    out.emplace_back(chunk.substr(s.begin, s.end - s.begin));
  }
  return out;
}

ParsedTimeml ParseTimeml(std::string_view xml, const std::string &fallback_doc_id,
                         const TimemlOptions &options) {
  const XmlNode root = ParseXml(xml);
  ParsedTimeml result;
  Document &doc = result.document;
  doc.source = "timeml";

  if (const XmlNode *docid = FindElement(root, "DOCID")) doc.doc_id = Trim(docid->InnerText());
  if (doc.doc_id.empty()) doc.doc_id = fallback_doc_id;

  const XmlNode *text_root = FindElement(root, "TEXT");
  TextLayout layout;
  Layout(text_root != nullptr ? *text_root : root, layout);

  // Token boundaries: whitespace, plus every event and sentence edge.
  std::set<std::size_t> cuts(layout.sentence_starts.begin(), layout.sentence_starts.end());
  for (const EventMention &m : layout.mentions) {
    cuts.insert(m.span.begin);
    cuts.insert(m.span.end);
  }
  std::vector<Span> token_spans;
  const std::string &plain = layout.plain;
  std::size_t i = 0;
  while (i < plain.size()) {
    if (IsSpace(plain[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < plain.size() && !IsSpace(plain[j])) ++j;
    std::size_t piece = i;
    for (auto cut = cuts.upper_bound(i); piece < j; ++cut) {
      const std::size_t stop = (cut != cuts.end() && *cut < j) ? *cut : j;
      for (const Span &s : PunctuationSpans(std::string_view(plain).substr(piece, stop - piece))) {
        token_spans.push_back({piece + s.begin, piece + s.end});
      }
      piece = stop;
      if (cut == cuts.end()) break;
    }
    i = j;
  }

  int sentence = 0;
  for (std::size_t t = 0; t < token_spans.size(); ++t) {
    Token token;
    token.surface = plain.substr(token_spans[t].begin, token_spans[t].end - token_spans[t].begin);
    if (!layout.sentence_starts.empty()) {
      const auto &starts = layout.sentence_starts;
      const auto count = std::upper_bound(starts.begin(), starts.end(), token_spans[t].begin) -
                         starts.begin();
      token.sentence = std::max<int>(0, static_cast<int>(count) - 1);
    } else {
      token.sentence = sentence;
      if (token.surface == "." || token.surface == "!" || token.surface == "?") ++sentence;
    }
    doc.tokens.push_back(std::move(token));
  }

  std::vector<const XmlNode *> elements;
  CollectElements(root, elements);
  std::map<std::string, std::vector<const XmlNode *>> instances;
  std::set<std::string> known_eids;
  for (const EventMention &m : layout.mentions) known_eids.insert(m.eid);
  for (const XmlNode *e : elements) {
    if (e->name == "MAKEINSTANCE") {
      const std::string event_id = AttributeOr(*e, "eventID", "");
      if (!known_eids.count(event_id)) {
        throw Error(ErrorCode::kDanglingInstance,
                    doc.doc_id + ": MAKEINSTANCE at offset " + std::to_string(e->offset) +
                        " references unknown event '" + event_id + "'");
      }
      instances[event_id].push_back(e);
    } else if (e->name == "TLINK" || e->name == "SLINK" || e->name == "ALINK" ||
               e->name == "TIMEX3" || e->name == "SIGNAL") {
      result.metadata.push_back({e->name, e->attributes, e->InnerText()});
    }
  }

  std::set<std::string> taken;
  for (const auto &[eid, list] : instances) {
    for (const XmlNode *mi : list) taken.insert(AttributeOr(*mi, "eiid", ""));
  }

  for (const EventMention &m : layout.mentions) {
    auto token = std::find_if(token_spans.begin(), token_spans.end(), [&](const Span &s) {
      return s.end > m.span.begin && s.begin < std::max(m.span.end, m.span.begin + 1);
    });
    if (token == token_spans.end()) {
      result.warnings.push_back(doc.doc_id + ": event " + m.eid + " has no text; skipped");
      continue;
    }
    Event event;
    event.eid = m.eid;
    event.token_offset = static_cast<std::size_t>(token - token_spans.begin());
    auto it = instances.find(m.eid);
    if (it == instances.end()) {
      event.eiid = SynthesizeInstanceId(m.eid, taken);
      taken.insert(event.eiid);
      event.pos_tag = "";
      result.warnings.push_back(doc.doc_id + ": event " + m.eid +
                                " has no MAKEINSTANCE; using " + event.eiid);
    } else {
      const XmlNode &mi = *it->second.front();
      if (it->second.size() > 1) {
        result.warnings.push_back(doc.doc_id + ": event " + m.eid +
                                  " has several instances; using the first");
      }
      event.eiid = AttributeOr(mi, "eiid", "");
      if (event.eiid.empty()) {
        event.eiid = SynthesizeInstanceId(m.eid, taken);
        taken.insert(event.eiid);
      }
      event.aspect = AttributeOr(mi, "aspect", "NONE");
      event.modality = AttributeOr(mi, "modality", "NONE");
      event.polarity = AttributeOr(mi, "polarity", "POS") == "NEG" ? Polarity::kNeg : Polarity::kPos;
      event.pos_tag = AttributeOr(mi, "pos", "");
    }
    if (event.polarity == Polarity::kNeg) event.category = EventCategory::kNegation;
    if (options.verbs_only && !event.pos_tag.empty() && event.pos_tag != "VERB") continue;
    if (event.pos_tag.empty()) {
      result.warnings.push_back(doc.doc_id + ": event " + m.eid + " has no pos; kept as verb");
      event.pos_tag = "VERB";
    }
    doc.events.push_back(std::move(event));
  }
  ValidateDocument(doc);
  return result;
}

}  // namespace tempaxis
