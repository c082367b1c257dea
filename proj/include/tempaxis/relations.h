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

#ifndef TEMPAXIS_RELATIONS_H_
#define TEMPAXIS_RELATIONS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

// Point and interval temporal relations.
//
// A pair of events is modelled as two closed intervals [start1, end1] and
// [start2, end2] with start <= end. The interval relation between them
// splits into four point comparisons (start1/start2, start1/end2, end1/start2,
// end1/end2); only the start/start comparison is annotated.

namespace tempaxis {

enum class PointRelation : std::uint8_t { kBefore, kAfter, kEqual, kVague };

inline constexpr std::array<PointRelation, 4> kPointRelations = {
    PointRelation::kBefore, PointRelation::kAfter, PointRelation::kEqual,
    PointRelation::kVague};

// The thirteen Allen relations, listed from "after" down to "before", plus
// VAGUE for "no information".
enum class IntervalRelation : std::uint8_t {
  kAfter,
  kImmediatelyAfter,
  kAfterAndOverlap,
  kEnds,
  kIncluded,
  kStartedBy,
  kEqual,
  kStarts,
  kIncludes,
  kEndedBy,
  kBeforeAndOverlap,
  kImmediatelyBefore,
  kBefore,
  kVague,
};

inline constexpr std::array<IntervalRelation, 13> kAllenRelations = {
    IntervalRelation::kAfter,           IntervalRelation::kImmediatelyAfter,
    IntervalRelation::kAfterAndOverlap, IntervalRelation::kEnds,
    IntervalRelation::kIncluded,        IntervalRelation::kStartedBy,
    IntervalRelation::kEqual,           IntervalRelation::kStarts,
    IntervalRelation::kIncludes,        IntervalRelation::kEndedBy,
    IntervalRelation::kBeforeAndOverlap, IntervalRelation::kImmediatelyBefore,
    IntervalRelation::kBefore};

// A set of base orders {<, =, >} over two time points. VAGUE corresponds to
// the full set.
class PointOrderSet {
 public:
  static constexpr std::uint8_t kLess = 1;
  static constexpr std::uint8_t kSame = 2;
  static constexpr std::uint8_t kGreater = 4;
  static constexpr std::uint8_t kAll = kLess | kSame | kGreater;

  constexpr PointOrderSet() = default;
  constexpr explicit PointOrderSet(std::uint8_t bits) : bits_(bits & kAll) {}

  static PointOrderSet Of(PointRelation rel);

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::uint8_t base) const {
    return (bits_ & base) != 0;
  }

  // The point relation carrying exactly this set, or nullopt when the set is
  // neither a singleton nor the full set.
  std::optional<PointRelation> Exact() const;

  // Singletons map to their relation; everything else to VAGUE.
  PointRelation Collapse() const;

  PointOrderSet Inverse() const;
  PointOrderSet Compose(PointOrderSet other) const;

  constexpr PointOrderSet operator&(PointOrderSet o) const {
    return PointOrderSet(bits_ & o.bits_);
  }
  constexpr PointOrderSet operator|(PointOrderSet o) const {
    return PointOrderSet(bits_ | o.bits_);
  }
  constexpr bool operator==(const PointOrderSet &) const = default;

 private:
  std::uint8_t bits_ = 0;
};

// Point comparisons between two intervals 1 and 2.
struct PointQuad {
  PointRelation ss = PointRelation::kVague;  // start1 vs start2
  PointRelation se = PointRelation::kVague;  // start1 vs end2
  PointRelation es = PointRelation::kVague;  // end1 vs start2
  PointRelation ee = PointRelation::kVague;  // end1 vs end2

  bool operator==(const PointQuad &) const = default;
};

enum class Answer : std::uint8_t { kNo, kYes };

// Answers to the two possibility questions: Q1 "can start1 be before
// start2?" and Q2 "can start2 be before start1?".
struct AnswerPair {
  Answer q1 = Answer::kNo;
  Answer q2 = Answer::kNo;

  bool operator==(const AnswerPair &) const = default;
};

PointRelation Inverse(PointRelation rel);
IntervalRelation Inverse(IntervalRelation rel);

// The unique quad of point relations forced by a (non-VAGUE) Allen relation
// between non-degenerate intervals. Throws kInvalidArgument for VAGUE.
PointQuad DecomposeIntervalRelation(IntervalRelation rel);

// start1 vs start2 for the given interval relation; VAGUE maps to VAGUE.
PointRelation ToStartPointRelation(IntervalRelation rel);

// Set composition with VAGUE read as {<, =, >}; non-singleton results
// collapse to VAGUE.
PointRelation ComposePointRelations(PointRelation first, PointRelation second);

// Fills the VAGUE (unknown) coordinates of `partial` with the strongest
// relation entailed by the known coordinates and start <= end on both
// intervals. Throws kUnsatisfiable when no real assignment exists.
PointQuad CompleteQuad(const PointQuad &partial);

PointRelation AnswersToRelation(AnswerPair answers);
AnswerPair RelationToAnswers(PointRelation rel);

// Short labels used in corpus files and reports: b, a, e, v.
std::string_view ShortLabel(PointRelation rel);
// Upper-case names: BEFORE, AFTER, EQUAL, VAGUE.
std::string_view Name(PointRelation rel);
std::string_view Name(IntervalRelation rel);

// Accepts both the short and the upper-case spellings (case-insensitive).
std::optional<PointRelation> ParsePointRelation(std::string_view text);
std::optional<IntervalRelation> ParseIntervalRelation(std::string_view text);

}  // namespace tempaxis

#endif  // TEMPAXIS_RELATIONS_H_
