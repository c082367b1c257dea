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

#include "tempaxis/temporal_graph.h"

#include <algorithm>
#include <deque>
#include <optional>

namespace tempaxis {
namespace {

// Edge u -> v meaning u <= v; `strict` when u < v.
struct OrderEdge {
  std::size_t to;
  bool strict;
};

// Finds a cycle through a strict edge in the <=-graph, if any. In the convex
// point algebra such a cycle exists exactly when the constraints are
// unsatisfiable.
std::optional<std::vector<std::size_t>> FindStrictCycle(
    const std::vector<std::vector<OrderEdge>> &graph) {
  const std::size_t n = graph.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (const OrderEdge &edge : graph[u]) {
      if (!edge.strict) continue;
      // BFS from edge.to back to u.
      std::vector<std::optional<std::size_t>> parent(n);
      std::vector<bool> seen(n, false);
      std::deque<std::size_t> queue{edge.to};
      seen[edge.to] = true;
      while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        if (v == u) {
          std::vector<std::size_t> path{u};
          for (std::size_t w = u; w != edge.to;) {
            w = *parent[w];
            path.push_back(w);
          }
          std::reverse(path.begin(), path.end());
          // path runs edge.to .. u; prepend u to close the cycle at u.
          path.insert(path.begin(), u);
          return path;
        }
        for (const OrderEdge &next : graph[v]) {
          if (!seen[next.to]) {
            seen[next.to] = true;
            parent[next.to] = v;
            queue.push_back(next.to);
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TemporalClosure::TemporalClosure(std::vector<std::string> events,
                                 std::vector<std::vector<PointOrderSet>> network)
    : events_(std::move(events)), network_(std::move(network)) {
  for (std::size_t i = 0; i < events_.size(); ++i) index_[events_[i]] = i;
}

std::size_t TemporalClosure::IndexOf(const std::string &id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown event '" + id + "'");
  }
  return it->second;
}

PointRelation TemporalClosure::Relation(const std::string &first,
                                        const std::string &second) const {
  return network_[IndexOf(first)][IndexOf(second)].Collapse();
}

std::vector<PointConstraint> TemporalClosure::Definite() const {
  std::vector<PointConstraint> out;
  for (std::size_t i = 0; i < events_.size(); ++i) {
    for (std::size_t j = i + 1; j < events_.size(); ++j) {
      const PointRelation rel = network_[i][j].Collapse();
      if (rel != PointRelation::kVague) out.push_back({events_[i], events_[j], rel});
    }
  }
  return out;
}

TemporalClosure SaturateGraph(const std::vector<std::string> &events,
                              const std::vector<PointConstraint> &constraints) {
  const std::size_t n = events.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(events[i], i).second) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate event '" + events[i] + "'");
    }
  }
  auto lookup = [&](const std::string &id) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint references unknown event '" + id + "'");
    }
    return it->second;
  };

  std::vector<std::vector<PointOrderSet>> net(
      n, std::vector<PointOrderSet>(n, PointOrderSet(PointOrderSet::kAll)));
  for (std::size_t i = 0; i < n; ++i) net[i][i] = PointOrderSet(PointOrderSet::kSame);

  std::vector<std::vector<OrderEdge>> graph(n);
  for (const PointConstraint &c : constraints) {
    const std::size_t a = lookup(c.first);
    const std::size_t b = lookup(c.second);
    const PointOrderSet rel = PointOrderSet::Of(c.relation);
    net[a][b] = net[a][b] & rel;
    net[b][a] = net[b][a] & rel.Inverse();
    switch (c.relation) {
      case PointRelation::kBefore: graph[a].push_back({b, true}); break;
      case PointRelation::kAfter: graph[b].push_back({a, true}); break;
      case PointRelation::kEqual:
        graph[a].push_back({b, false});
        graph[b].push_back({a, false});
        break;
      case PointRelation::kVague: break;
    }
  }

  if (auto cycle = FindStrictCycle(graph)) {
    std::vector<std::string> ids;
    std::string text;
    for (std::size_t v : *cycle) {
      ids.push_back(events[v]);
      text += (text.empty() ? "" : " -> ") + events[v];
    }
    throw InconsistencyError(std::move(ids), "contradictory start-point order: " + text);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (net[i][k].bits() == PointOrderSet::kAll) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const PointOrderSet narrowed = net[i][j] & net[i][k].Compose(net[k][j]);
          if (!(narrowed == net[i][j])) {
            net[i][j] = narrowed;
            changed = true;
          }
        }
      }
    }
  }
  return TemporalClosure(events, std::move(net));
}

}  // namespace tempaxis
