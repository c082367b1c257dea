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

#include "tempaxis/multiaxis.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "tempaxis/error.h"

namespace tempaxis {
namespace {

std::vector<const Event *> InTextOrder(const Document &doc) {
  std::vector<const Event *> events;
  for (const Event &e : doc.events) events.push_back(&e);
  std::stable_sort(events.begin(), events.end(), [](const Event *a, const Event *b) {
    return a->token_offset < b->token_offset;
  });
  return events;
}

bool Matches(const Axis &selector, const Axis &axis) {
  if (selector.kind != axis.kind) return false;
  if (selector.kind == AxisKind::kOrthogonal) return selector.anchor == axis.anchor;
  if (selector.kind == AxisKind::kParallel && selector.parallel) {
    return selector.parallel == axis.parallel;
  }
  return true;
}

}  // namespace

const Event *Document::FindEvent(std::string_view eiid) const {
  for (const Event &e : events) {
    if (e.eiid == eiid) return &e;
  }
  return nullptr;
}

int Document::SentenceOf(const Event &event) const {
  return tokens.at(event.token_offset).sentence;
}

void ValidateDocument(const Document &doc) {
  for (std::size_t i = 1; i < doc.tokens.size(); ++i) {
    if (doc.tokens[i].sentence < doc.tokens[i - 1].sentence) {
      throw Error(ErrorCode::kInvalidArgument,
                  doc.doc_id + ": sentence index decreases at token " + std::to_string(i));
    }
  }
  for (const Event &e : doc.events) {
    if (e.token_offset >= doc.tokens.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  doc.doc_id + ": event " + e.eiid + " offset out of range");
    }
  }
}

AxisDisposition ClassifyAxis(EventCategory category) {
  switch (category) {
    case EventCategory::kMainCandidate: return {AxisKind::kMain, std::nullopt};
    case EventCategory::kIntention:
    case EventCategory::kOpinion: return {AxisKind::kOrthogonal, std::nullopt};
    case EventCategory::kHypothesis: return {AxisKind::kParallel, ParallelKind::kHypothesis};
    case EventCategory::kGeneric: return {AxisKind::kParallel, ParallelKind::kGeneric};
    case EventCategory::kNegation: return {AxisKind::kNone, std::nullopt};
    case EventCategory::kStatic:
    case EventCategory::kRecurrent: return {AxisKind::kOther, std::nullopt};
  }
  return {AxisKind::kOther, std::nullopt};
}

AxisAssignment AssignAxis(const std::string &eiid, EventCategory category,
                          const std::string &anchor) {
  const AxisDisposition disposition = ClassifyAxis(category);
  AxisAssignment out;
  out.eiid = eiid;
  out.axis.kind = disposition.kind;
  out.axis.parallel = disposition.parallel;
  if (disposition.kind == AxisKind::kOrthogonal) {
    if (anchor.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "orthogonal event " + eiid + " needs a main-axis anchor");
    }
    out.axis.anchor = anchor;
  }
  out.anchorable_on_main = disposition.kind == AxisKind::kMain;
  return out;
}

std::vector<std::string> AnchorableEvents(
    const Document &doc, const Axis &axis,
    const std::vector<AxisAssignment> &assignments) {
  std::map<std::string, const AxisAssignment *> by_event;
  for (const AxisAssignment &a : assignments) by_event[a.eiid] = &a;
  std::vector<std::string> out;
  for (const Event *e : InTextOrder(doc)) {
    auto it = by_event.find(e->eiid);
    if (it == by_event.end()) {
      throw Error(ErrorCode::kMissingAssignment,
                  doc.doc_id + ": event " + e->eiid + " has no axis assignment");
    }
    if (Matches(axis, it->second->axis)) out.push_back(e->eiid);
  }
  return out;
}

std::vector<std::string> AxisMembers(
    const Document &doc, const Axis &axis,
    const std::vector<AxisAssignment> &assignments) {
  std::vector<std::string> branch = AnchorableEvents(doc, axis, assignments);
  if (axis.kind != AxisKind::kOrthogonal) return branch;
  const Event *anchor = doc.FindEvent(axis.anchor);
  if (anchor == nullptr) return branch;
  std::vector<std::string> out;
  bool placed = false;
  for (const std::string &id : branch) {
    if (!placed && doc.FindEvent(id)->token_offset > anchor->token_offset) {
      out.push_back(anchor->eiid);
      placed = true;
    }
    out.push_back(id);
  }
  if (!placed) out.push_back(anchor->eiid);
  return out;
}

std::vector<EventPair> GeneratePairs(const Document &doc,
                                     const std::vector<std::string> &anchorable,
                                     int window_sentences) {
  if (window_sentences < 1) {
    throw Error(ErrorCode::kInvalidArgument, "window_sentences must be >= 1");
  }
  std::vector<const Event *> events;
  for (const std::string &id : anchorable) {
    const Event *e = doc.FindEvent(id);
    if (e == nullptr) {
      throw Error(ErrorCode::kInvalidArgument,
                  doc.doc_id + ": unknown event " + id);
    }
    events.push_back(e);
  }
  std::stable_sort(events.begin(), events.end(), [](const Event *a, const Event *b) {
    return a->token_offset < b->token_offset;
  });
  std::vector<EventPair> pairs;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const int si = doc.SentenceOf(*events[i]);
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      const int sj = doc.SentenceOf(*events[j]);
      if (sj - si < window_sentences) {
        pairs.push_back({events[i]->eiid, events[j]->eiid, doc.doc_id});
      }
    }
  }
  return pairs;
}

std::string_view Name(EventCategory category) {
  switch (category) {
    case EventCategory::kMainCandidate: return "MAIN_CANDIDATE";
    case EventCategory::kIntention: return "INTENTION";
    case EventCategory::kOpinion: return "OPINION";
    case EventCategory::kHypothesis: return "HYPOTHESIS";
    case EventCategory::kGeneric: return "GENERIC";
    case EventCategory::kNegation: return "NEGATION";
    case EventCategory::kStatic: return "STATIC";
    case EventCategory::kRecurrent: return "RECURRENT";
  }
  return "MAIN_CANDIDATE";
}

std::optional<EventCategory> ParseEventCategory(std::string_view text) {
  std::string upper(text);
  for (char &c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "MAIN") return EventCategory::kMainCandidate;
  for (int i = 0; i <= static_cast<int>(EventCategory::kRecurrent); ++i) {
    const auto category = static_cast<EventCategory>(i);
    if (upper == Name(category)) return category;
  }
  return std::nullopt;
}

}  // namespace tempaxis
