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

#ifndef TEMPAXIS_TEMPORAL_GRAPH_H_
#define TEMPAXIS_TEMPORAL_GRAPH_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tempaxis/error.h"
#include "tempaxis/relations.h"

namespace tempaxis {

// Start-point constraint "first <rel> second".
struct PointConstraint {
  std::string first;
  std::string second;
  PointRelation relation = PointRelation::kVague;
};

// Raised by SaturateGraph when the constraints admit no assignment. The
// witness is a cycle of event ids e0 -> e1 -> ... -> e0 along which every
// step is "<" or "=" and at least one step is "<".
class InconsistencyError : public Error {
 public:
  InconsistencyError(std::vector<std::string> cycle, const std::string &message)
      : Error(ErrorCode::kInconsistent, message), cycle_(std::move(cycle)) {}

  const std::vector<std::string> &cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

// Closure of a set of start-point constraints under composition.
class TemporalClosure {
 public:
  TemporalClosure(std::vector<std::string> events,
                  std::vector<std::vector<PointOrderSet>> network);

  const std::vector<std::string> &events() const { return events_; }

  // Relation of `first` to `second`; reversed queries are inverted. Unknown
  // ids throw kInvalidArgument.
  PointRelation Relation(const std::string &first,
                         const std::string &second) const;

  // Every pair (i < j in event order) whose relation is not VAGUE.
  std::vector<PointConstraint> Definite() const;

 private:
  std::size_t IndexOf(const std::string &id) const;

  std::vector<std::string> events_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<PointOrderSet>> network_;
};

// Fixed point of point-relation composition over all constraints. Throws
// InconsistencyError when two contradictory relations are derived for some
// pair, or kInvalidArgument when a constraint names an unknown event.
TemporalClosure SaturateGraph(const std::vector<std::string> &events,
                              const std::vector<PointConstraint> &constraints);

}  // namespace tempaxis

#endif  // TEMPAXIS_TEMPORAL_GRAPH_H_
