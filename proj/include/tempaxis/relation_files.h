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

#ifndef TEMPAXIS_RELATION_FILES_H_
#define TEMPAXIS_RELATION_FILES_H_

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tempaxis/relations.h"

// Relation corpora keyed by (doc_id, event id, event id).
//
// Start-point files (one pair per line):
//   doc_id TAB token1 TAB token2 TAB eiid1 TAB eiid2 TAB BEFORE|AFTER|EQUAL|VAGUE
// Dense interval files:
//   doc_id TAB eid1 TAB eid2 TAB b|a|i|ii|s|v

namespace tempaxis {

enum class RelationSource { kMatres, kTbDense, kInternal };

struct RelationKey {
  std::string doc_id;
  std::string first;
  std::string second;

  RelationKey Reversed() const { return {doc_id, second, first}; }
  auto operator<=>(const RelationKey &) const = default;
  bool operator==(const RelationKey &) const = default;
};

using RelationLabel = std::variant<PointRelation, IntervalRelation>;

struct RelationEntry {
  RelationLabel label = PointRelation::kVague;
  std::string first_token;  // surface forms, start-point files only
  std::string second_token;

  bool operator==(const RelationEntry &) const = default;
};

struct RelationSet {
  RelationSource source = RelationSource::kInternal;
  std::map<RelationKey, RelationEntry> entries;

  // Throws kDuplicatePair naming the key.
  void Add(const RelationKey &key, RelationEntry entry);
  const RelationEntry *Find(const RelationKey &key) const;
  std::size_t size() const { return entries.size(); }

  bool operator==(const RelationSet &) const = default;
};

// Start-point view of a label: interval labels pass through `projector`.
PointRelation ProjectLabel(const RelationLabel &label,
                           PointRelation (*projector)(IntervalRelation) = ToStartPointRelation);
RelationLabel InvertLabel(const RelationLabel &label);

// Dense-corpus abbreviation to Allen value: b, a, i (includes),
// ii (is included), s (simultaneous), v.
std::optional<IntervalRelation> ParseTbDenseLabel(std::string_view text);
std::string_view TbDenseLabel(IntervalRelation rel);

RelationSet LoadTbDense(std::string_view text, const std::string &source = "<tbdense>");
std::string ExportTbDense(const RelationSet &set);

// A header line whose first field is "doc_id" or "docid" is skipped.
RelationSet LoadMatres(std::string_view text, const std::string &source = "<matres>");
// Ordered by (doc_id, eiid1, eiid2). Interval labels are projected.
std::string ExportMatres(const RelationSet &set);

// Converts every label to its start-point relation (dense corpus comparison).
RelationSet ToStartPoints(const RelationSet &set);

}  // namespace tempaxis

#endif  // TEMPAXIS_RELATION_FILES_H_
