// Copyright 2026 The NCG Workbench Authors
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

#include "ncg/game.h"

#include <algorithm>
#include <set>
#include <string>

#include "ncg/distances.h"
#include "ncg/error.h"

namespace ncg {

Cost CostBreakdown::total(const Alpha& alpha) const {
  return Cost(alpha.value() * build_count) + dist_sum.as<Rational>();
}

Cost DeviationDelta::at(const Alpha& alpha) const {
  return Cost(alpha.value() * delta_build) + delta_dist.as<Rational>();
}

CostBreakdown cost_breakdown(const OwnedGraph& g, Vertex v) {
  g.check_vertex(v);
  return {g.owned_count(v), connection_cost(g, v)};
}

Cost vertex_cost(const OwnedGraph& g, Vertex v, const Alpha& alpha) {
  return cost_breakdown(g, v).total(alpha);
}

Cost social_cost(const OwnedGraph& g, const Alpha& alpha) {
  Cost sum(Rational(0));
  for (Vertex v = 0; v < g.n(); ++v) sum = sum + vertex_cost(g, v, alpha);
  return sum;
}

OwnedGraph apply_deviation(const OwnedGraph& g, Vertex v,
                           std::span<const Vertex> new_owned) {
  g.check_vertex(v);
  std::set<Vertex> targets;
  for (Vertex u : new_owned) {
    g.check_vertex(u);
    if (u == v) {
      throw Error(ErrorCode::kSelfTarget,
                  "vertex " + std::to_string(v) + " cannot buy a self-loop");
    }
    if (g.owns(u, v)) {
      throw Error(ErrorCode::kBuysExistingEdge,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} is already bought by " + std::to_string(u));
    }
    targets.insert(u);
  }
  std::vector<OwnedEdge> edges;
  edges.reserve(static_cast<std::size_t>(g.edge_count()) + targets.size());
  for (const OwnedEdge& e : g.edges()) {
    if (e.owner != v) edges.push_back(e);
  }
  for (Vertex u : targets) edges.push_back({v, u, v});
  return OwnedGraph::build(g.n(), edges);
}

DeviationDelta deviation_delta(const OwnedGraph& g, Vertex v,
                               std::span<const Vertex> new_owned) {
  const OwnedGraph after = apply_deviation(g, v, new_owned);
  // Keeping the current purchases changes nothing, even when disconnected.
  if (after == g) return {};
  const Hops before_dist = connection_cost(g, v);
  const Hops after_dist = connection_cost(after, v);
  DeviationDelta d;
  d.delta_build = after.owned_count(v) - g.owned_count(v);
  if (after_dist.is_infinite()) {
    d.delta_dist = Hops::infinite();
  } else if (before_dist.is_infinite()) {
    d.delta_dist = Hops::neg_infinite();
  } else {
    d.delta_dist = after_dist - before_dist;
  }
  return d;
}

}  // namespace ncg
