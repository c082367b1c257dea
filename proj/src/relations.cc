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

#include "tempaxis/relations.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "tempaxis/error.h"

namespace tempaxis {
namespace {

constexpr std::uint8_t kLess = PointOrderSet::kLess;
constexpr std::uint8_t kSame = PointOrderSet::kSame;
constexpr std::uint8_t kGreater = PointOrderSet::kGreater;

std::uint8_t ComposeBase(std::uint8_t a, std::uint8_t b) {
  if (a == kSame) return b;
  if (b == kSame) return a;
  if (a == b) return a;
  return PointOrderSet::kAll;
}

std::string Upper(std::string_view text) {
  std::string out(text);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

PointOrderSet PointOrderSet::Of(PointRelation rel) {
  switch (rel) {
    case PointRelation::kBefore: return PointOrderSet(kLess);
    case PointRelation::kAfter: return PointOrderSet(kGreater);
    case PointRelation::kEqual: return PointOrderSet(kSame);
    case PointRelation::kVague: return PointOrderSet(kAll);
  }
  return PointOrderSet(kAll);
}

std::optional<PointRelation> PointOrderSet::Exact() const {
  switch (bits_) {
    case kLess: return PointRelation::kBefore;
    case kGreater: return PointRelation::kAfter;
    case kSame: return PointRelation::kEqual;
    case kAll: return PointRelation::kVague;
    default: return std::nullopt;
  }
}

PointRelation PointOrderSet::Collapse() const {
  switch (bits_) {
    case kLess: return PointRelation::kBefore;
    case kGreater: return PointRelation::kAfter;
    case kSame: return PointRelation::kEqual;
    default: return PointRelation::kVague;
  }
}

PointOrderSet PointOrderSet::Inverse() const {
  std::uint8_t out = bits_ & kSame;
  if (bits_ & kLess) out |= kGreater;
  if (bits_ & kGreater) out |= kLess;
  return PointOrderSet(out);
}

PointOrderSet PointOrderSet::Compose(PointOrderSet other) const {
  std::uint8_t out = 0;
  for (std::uint8_t a : {kLess, kSame, kGreater}) {
    if (!contains(a)) continue;
    for (std::uint8_t b : {kLess, kSame, kGreater}) {
      if (other.contains(b)) out |= ComposeBase(a, b);
    }
  }
  return PointOrderSet(out);
}

PointRelation Inverse(PointRelation rel) {
  switch (rel) {
    case PointRelation::kBefore: return PointRelation::kAfter;
    case PointRelation::kAfter: return PointRelation::kBefore;
    default: return rel;
  }
}

IntervalRelation Inverse(IntervalRelation rel) {
  if (rel == IntervalRelation::kVague) return rel;
  // The enumeration lists each relation opposite its inverse.
  const int index = static_cast<int>(rel);
  return static_cast<IntervalRelation>(12 - index);
}

PointQuad DecomposeIntervalRelation(IntervalRelation rel) {
  using P = PointRelation;
  switch (rel) {
    case IntervalRelation::kBefore: return {P::kBefore, P::kBefore, P::kBefore, P::kBefore};
    case IntervalRelation::kImmediatelyBefore: return {P::kBefore, P::kBefore, P::kEqual, P::kBefore};
    case IntervalRelation::kBeforeAndOverlap: return {P::kBefore, P::kBefore, P::kAfter, P::kBefore};
    case IntervalRelation::kEndedBy: return {P::kBefore, P::kBefore, P::kAfter, P::kEqual};
    case IntervalRelation::kIncludes: return {P::kBefore, P::kBefore, P::kAfter, P::kAfter};
    case IntervalRelation::kStarts: return {P::kEqual, P::kBefore, P::kAfter, P::kBefore};
    case IntervalRelation::kEqual: return {P::kEqual, P::kBefore, P::kAfter, P::kEqual};
    case IntervalRelation::kStartedBy: return {P::kEqual, P::kBefore, P::kAfter, P::kAfter};
    case IntervalRelation::kIncluded: return {P::kAfter, P::kBefore, P::kAfter, P::kBefore};
    case IntervalRelation::kEnds: return {P::kAfter, P::kBefore, P::kAfter, P::kEqual};
    case IntervalRelation::kAfterAndOverlap: return {P::kAfter, P::kBefore, P::kAfter, P::kAfter};
    case IntervalRelation::kImmediatelyAfter: return {P::kAfter, P::kEqual, P::kAfter, P::kAfter};
    case IntervalRelation::kAfter: return {P::kAfter, P::kAfter, P::kAfter, P::kAfter};
    case IntervalRelation::kVague: break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "VAGUE has no unique point decomposition");
}

PointRelation ToStartPointRelation(IntervalRelation rel) {
  if (rel == IntervalRelation::kVague) return PointRelation::kVague;
  return DecomposeIntervalRelation(rel).ss;
}

PointRelation ComposePointRelations(PointRelation first, PointRelation second) {
  return PointOrderSet::Of(first).Compose(PointOrderSet::Of(second)).Collapse();
}

PointQuad CompleteQuad(const PointQuad &partial) {
  // Points: 0 = start1, 1 = end1, 2 = start2, 3 = end2.
  constexpr int kPoints = 4;
  PointOrderSet net[kPoints][kPoints];
  for (int i = 0; i < kPoints; ++i) {
    for (int j = 0; j < kPoints; ++j) {
      net[i][j] = PointOrderSet(i == j ? kSame : PointOrderSet::kAll);
    }
  }
  auto constrain = [&](int i, int j, PointOrderSet rel) {
    net[i][j] = net[i][j] & rel;
    net[j][i] = net[j][i] & rel.Inverse();
  };
  constrain(0, 1, PointOrderSet(kLess | kSame));
  constrain(2, 3, PointOrderSet(kLess | kSame));
  constrain(0, 2, PointOrderSet::Of(partial.ss));
  constrain(0, 3, PointOrderSet::Of(partial.se));
  constrain(1, 2, PointOrderSet::Of(partial.es));
  constrain(1, 3, PointOrderSet::Of(partial.ee));

  // Path consistency; for the convex point algebra this yields the minimal
  // network.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < kPoints; ++k) {
      for (int i = 0; i < kPoints; ++i) {
        for (int j = 0; j < kPoints; ++j) {
          const PointOrderSet narrowed = net[i][j] & net[i][k].Compose(net[k][j]);
          if (narrowed.empty()) {
            throw Error(ErrorCode::kUnsatisfiable,
                        "point comparisons admit no assignment with start <= end");
          }
          if (!(narrowed == net[i][j])) {
            net[i][j] = narrowed;
            changed = true;
          }
        }
      }
    }
  }

  auto fill = [&](PointRelation known, int i, int j) {
    return known != PointRelation::kVague ? known : net[i][j].Collapse();
  };
  return {fill(partial.ss, 0, 2), fill(partial.se, 0, 3),
          fill(partial.es, 1, 2), fill(partial.ee, 1, 3)};
}

PointRelation AnswersToRelation(AnswerPair answers) {
  const bool q1 = answers.q1 == Answer::kYes;
  const bool q2 = answers.q2 == Answer::kYes;
  if (q1 && q2) return PointRelation::kVague;
  if (!q1 && !q2) return PointRelation::kEqual;
  return q1 ? PointRelation::kBefore : PointRelation::kAfter;
}

AnswerPair RelationToAnswers(PointRelation rel) {
  switch (rel) {
    case PointRelation::kVague: return {Answer::kYes, Answer::kYes};
    case PointRelation::kEqual: return {Answer::kNo, Answer::kNo};
    case PointRelation::kBefore: return {Answer::kYes, Answer::kNo};
    case PointRelation::kAfter: return {Answer::kNo, Answer::kYes};
  }
  return {Answer::kYes, Answer::kYes};
}

std::string_view ShortLabel(PointRelation rel) {
  switch (rel) {
    case PointRelation::kBefore: return "b";
    case PointRelation::kAfter: return "a";
    case PointRelation::kEqual: return "e";
    case PointRelation::kVague: return "v";
  }
  return "v";
}

std::string_view Name(PointRelation rel) {
  switch (rel) {
    case PointRelation::kBefore: return "BEFORE";
    case PointRelation::kAfter: return "AFTER";
    case PointRelation::kEqual: return "EQUAL";
    case PointRelation::kVague: return "VAGUE";
  }
  return "VAGUE";
}

std::string_view Name(IntervalRelation rel) {
  switch (rel) {
    case IntervalRelation::kAfter: return "AFTER";
    case IntervalRelation::kImmediatelyAfter: return "IMMEDIATELY_AFTER";
    case IntervalRelation::kAfterAndOverlap: return "AFTER_AND_OVERLAP";
    case IntervalRelation::kEnds: return "ENDS";
    case IntervalRelation::kIncluded: return "INCLUDED";
    case IntervalRelation::kStartedBy: return "STARTED_BY";
    case IntervalRelation::kEqual: return "EQUAL";
    case IntervalRelation::kStarts: return "STARTS";
    case IntervalRelation::kIncludes: return "INCLUDES";
    case IntervalRelation::kEndedBy: return "ENDED_BY";
    case IntervalRelation::kBeforeAndOverlap: return "BEFORE_AND_OVERLAP";
    case IntervalRelation::kImmediatelyBefore: return "IMMEDIATELY_BEFORE";
    case IntervalRelation::kBefore: return "BEFORE";
    case IntervalRelation::kVague: return "VAGUE";
  }
  return "VAGUE";
}

std::optional<PointRelation> ParsePointRelation(std::string_view text) {
  const std::string upper = Upper(text);
  for (PointRelation rel : kPointRelations) {
    if (upper == Name(rel) || upper == Upper(ShortLabel(rel))) return rel;
  }
  return std::nullopt;
}

std::optional<IntervalRelation> ParseIntervalRelation(std::string_view text) {
  const std::string upper = Upper(text);
  for (IntervalRelation rel : kAllenRelations) {
    if (upper == Name(rel)) return rel;
  }
  if (upper == "VAGUE") return IntervalRelation::kVague;
  return std::nullopt;
}

}  // namespace tempaxis
