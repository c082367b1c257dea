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

#include "tempaxis/relation_files.h"

#include "tempaxis/error.h"
#include "tempaxis/file_util.h"

namespace tempaxis {
namespace {

std::string KeyText(const RelationKey &key) {
  return "(" + key.doc_id + ", " + key.first + ", " + key.second + ")";
}

bool IsHeader(const std::vector<std::string_view> &fields) {
  return !fields.empty() && (fields[0] == "doc_id" || fields[0] == "docid");
}

}  // namespace

void RelationSet::Add(const RelationKey &key, RelationEntry entry) {
  if (!entries.emplace(key, std::move(entry)).second) {
    throw Error(ErrorCode::kDuplicatePair, "duplicate pair " + KeyText(key));
  }
}

const RelationEntry *RelationSet::Find(const RelationKey &key) const {
  auto it = entries.find(key);
  return it == entries.end() ? nullptr : &it->second;
}

PointRelation ProjectLabel(const RelationLabel &label,
                           PointRelation (*projector)(IntervalRelation)) {
  if (const auto *point = std::get_if<PointRelation>(&label)) return *point;
  return projector(std::get<IntervalRelation>(label));
}

RelationLabel InvertLabel(const RelationLabel &label) {
  if (const auto *point = std::get_if<PointRelation>(&label)) return Inverse(*point);
  return Inverse(std::get<IntervalRelation>(label));
}

std::optional<IntervalRelation> ParseTbDenseLabel(std::string_view text) {
  if (text == "b") return IntervalRelation::kBefore;
  if (text == "a") return IntervalRelation::kAfter;
  if (text == "i") return IntervalRelation::kIncludes;
  if (text == "ii") return IntervalRelation::kIncluded;
  if (text == "s") return IntervalRelation::kEqual;
  if (text == "v") return IntervalRelation::kVague;
  return std::nullopt;
}

std::string_view TbDenseLabel(IntervalRelation rel) {
  switch (rel) {
    case IntervalRelation::kBefore: return "b";
    case IntervalRelation::kAfter: return "a";
    case IntervalRelation::kIncludes: return "i";
    case IntervalRelation::kIncluded: return "ii";
    case IntervalRelation::kEqual: return "s";
    case IntervalRelation::kVague: return "v";
    default: break;
  }
  throw Error(ErrorCode::kUnknownLabel,
              std::string(Name(rel)) + " has no dense-corpus abbreviation");
}

RelationSet LoadTbDense(std::string_view text, const std::string &source) {
  RelationSet set;
  set.source = RelationSource::kTbDense;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto fields = SplitTabs(line);
    if (fields.size() != 4) {
      throw Error(ErrorCode::kColumnCount,
                  where + ": expected 4 columns, got " + std::to_string(fields.size()));
    }
    const auto rel = ParseTbDenseLabel(Trim(fields[3]));
    if (!rel) {
      throw Error(ErrorCode::kUnknownLabel,
                  where + ": unknown relation '" + std::string(fields[3]) + "'");
    }
    const RelationKey key{UnescapeField(fields[0]), UnescapeField(fields[1]),
                          UnescapeField(fields[2])};
    try {
      set.Add(key, RelationEntry{*rel, "", ""});
    } catch (const Error &e) {
      throw Error(ErrorCode::kDuplicatePair, where + ": duplicate pair " + KeyText(key));
    }
  }
  return set;
}

std::string ExportTbDense(const RelationSet &set) {
  std::string out;
  for (const auto &[key, entry] : set.entries) {
    const auto *rel = std::get_if<IntervalRelation>(&entry.label);
    if (rel == nullptr) {
      throw Error(ErrorCode::kUnknownLabel, "start-point label in dense export " + KeyText(key));
    }
    out += EscapeField(key.doc_id) + '\t' + EscapeField(key.first) + '\t' +
           EscapeField(key.second) + '\t' + std::string(TbDenseLabel(*rel)) + '\n';
  }
  return out;
}

RelationSet LoadMatres(std::string_view text, const std::string &source) {
  RelationSet set;
  set.source = RelationSource::kMatres;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto fields = SplitTabs(line);
    if (line_no == 1 && IsHeader(fields)) continue;
    if (fields.size() != 6) {
      throw Error(ErrorCode::kColumnCount,
                  where + ": expected 6 columns, got " + std::to_string(fields.size()));
    }
    const auto rel = ParsePointRelation(Trim(fields[5]));
    if (!rel || fields[5].size() == 1) {
      throw Error(ErrorCode::kUnknownLabel,
                  where + ": unknown relation '" + std::string(fields[5]) + "'");
    }
    const RelationKey key{UnescapeField(fields[0]), UnescapeField(fields[3]),
                          UnescapeField(fields[4])};
    try {
      set.Add(key, RelationEntry{*rel, UnescapeField(fields[1]), UnescapeField(fields[2])});
    } catch (const Error &e) {
      throw Error(ErrorCode::kDuplicatePair, where + ": duplicate pair " + KeyText(key));
    }
  }
  return set;
}

std::string ExportMatres(const RelationSet &set) {
  std::string out;
  for (const auto &[key, entry] : set.entries) {
    out += EscapeField(key.doc_id) + '\t' + EscapeField(entry.first_token) + '\t' +
           EscapeField(entry.second_token) + '\t' + EscapeField(key.first) + '\t' +
           EscapeField(key.second) + '\t' + std::string(Name(ProjectLabel(entry.label))) +
           '\n';
  }
  return out;
}

RelationSet ToStartPoints(const RelationSet &set) {
  RelationSet out;
  out.source = RelationSource::kInternal;
  for (const auto &[key, entry] : set.entries) {
    RelationEntry converted = entry;
    converted.label = ProjectLabel(entry.label);
    out.entries.emplace(key, std::move(converted));
  }
  return out;
}

}  // namespace tempaxis
