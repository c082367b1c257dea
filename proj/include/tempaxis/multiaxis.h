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

#ifndef TEMPAXIS_MULTIAXIS_H_
#define TEMPAXIS_MULTIAXIS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Corpus model: documents, verb events with semantic categories, the axis
// each category lives on, and dense same-axis pair generation.

namespace tempaxis {

struct Token {
  std::string surface;
  std::string pos;  // empty when no tag is available
  int sentence = 0;

  bool operator==(const Token &) const = default;
};

enum class EventCategory : std::uint8_t {
  kMainCandidate,
  kIntention,
  kOpinion,
  kHypothesis,
  kGeneric,
  kNegation,
  kStatic,
  kRecurrent,
};

enum class Polarity : std::uint8_t { kPos, kNeg };

struct Event {
  std::string eid;
  std::string eiid;
  std::size_t token_offset = 0;
  EventCategory category = EventCategory::kMainCandidate;
  std::string aspect = "NONE";
  std::string modality = "NONE";
  Polarity polarity = Polarity::kPos;
  std::string pos_tag = "VERB";

  bool operator==(const Event &) const = default;
};

struct Document {
  std::string doc_id;
  std::vector<Token> tokens;
  std::vector<Event> events;
  std::string source;

  // Event by instance id, or nullptr.
  const Event *FindEvent(std::string_view eiid) const;
  int SentenceOf(const Event &event) const;

  bool operator==(const Document &) const = default;
};

// Throws kInvalidArgument when sentence indices decrease or an event offset
// lies outside the token list.
void ValidateDocument(const Document &doc);

enum class AxisKind : std::uint8_t { kMain, kOrthogonal, kParallel, kNone, kOther };
enum class ParallelKind : std::uint8_t { kHypothesis, kGeneric };

// Where an event category sits. `parallel` is set for parallel axes.
struct AxisDisposition {
  AxisKind kind = AxisKind::kMain;
  std::optional<ParallelKind> parallel;

  bool operator==(const AxisDisposition &) const = default;
};

AxisDisposition ClassifyAxis(EventCategory category);

struct Axis {
  AxisKind kind = AxisKind::kMain;
  std::string anchor;                  // orthogonal axes: main-axis anchor eiid
  std::optional<ParallelKind> parallel;  // parallel axes

  static Axis Main() { return {AxisKind::kMain, "", std::nullopt}; }
  static Axis Orthogonal(std::string anchor) {
    return {AxisKind::kOrthogonal, std::move(anchor), std::nullopt};
  }
  static Axis Parallel(ParallelKind kind) {
    return {AxisKind::kParallel, "", kind};
  }
  static Axis None() { return {AxisKind::kNone, "", std::nullopt}; }

  bool operator==(const Axis &) const = default;
};

struct AxisAssignment {
  std::string eiid;
  Axis axis;
  bool anchorable_on_main = false;

  bool operator==(const AxisAssignment &) const = default;
};

// Builds the assignment implied by a category. Orthogonal categories need the
// anchor event they branch from; kInvalidArgument if it is missing.
AxisAssignment AssignAxis(const std::string &eiid, EventCategory category,
                          const std::string &anchor = "");

struct EventPair {
  std::string first;
  std::string second;
  std::string doc_id;

  bool operator==(const EventPair &) const = default;
  auto operator<=>(const EventPair &) const = default;
};

// Events of `doc` whose assignment matches `axis`, in text order. For an
// orthogonal axis only the branch events are returned, not the anchor.
// Throws kMissingAssignment when some event has no assignment.
std::vector<std::string> AnchorableEvents(
    const Document &doc, const Axis &axis,
    const std::vector<AxisAssignment> &assignments);

// Members of an axis for relation annotation: like AnchorableEvents, but an
// orthogonal axis also includes its anchor, which sits on both axes.
std::vector<std::string> AxisMembers(
    const Document &doc, const Axis &axis,
    const std::vector<AxisAssignment> &assignments);

// All pairs of `anchorable` events whose sentence indices differ by less
// than `window_sentences`, first-in-text first, ordered by (first offset,
// second offset).
std::vector<EventPair> GeneratePairs(const Document &doc,
                                     const std::vector<std::string> &anchorable,
                                     int window_sentences = 2);

std::string_view Name(EventCategory category);
std::optional<EventCategory> ParseEventCategory(std::string_view text);

}  // namespace tempaxis

#endif  // TEMPAXIS_MULTIAXIS_H_
