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

#ifndef NCG_GAME_H_
#define NCG_GAME_H_

#include <span>
#include <vector>

#include "ncg/extended.h"
#include "ncg/owned_graph.h"
#include "ncg/rational.h"

namespace ncg {

// c_v = alpha * build_count + dist_sum.
struct CostBreakdown {
  int build_count = 0;
  Hops dist_sum = 0;

  Cost total(const Alpha& alpha) const;
};

// Change in a vertex's cost caused by a deviation, as a function of alpha:
// delta_build * alpha + delta_dist. delta_dist is +inf when the deviator ends
// up disconnected and -inf when a disconnected deviator becomes connected.
struct DeviationDelta {
  int delta_build = 0;
  Hops delta_dist = 0;

  Cost at(const Alpha& alpha) const;
  bool improves_at(const Alpha& alpha) const { return at(alpha) < Cost(0); }

  friend bool operator==(const DeviationDelta&, const DeviationDelta&) =
      default;
};

CostBreakdown cost_breakdown(const OwnedGraph& g, Vertex v);

// alpha * |E_v| + D(v). Throws kIndexOutOfRange.
Cost vertex_cost(const OwnedGraph& g, Vertex v, const Alpha& alpha);

// Sum of vertex costs.
Cost social_cost(const OwnedGraph& g, const Alpha& alpha);

// Replaces the edges bought by v with edges to `new_owned`; all other
// purchases are kept. Throws kSelfTarget when v is listed, kBuysExistingEdge
// when some listed u already bought {u, v}, kIndexOutOfRange.
OwnedGraph apply_deviation(const OwnedGraph& g, Vertex v,
                           std::span<const Vertex> new_owned);

// Cost change of v for apply_deviation(g, v, new_owned).
DeviationDelta deviation_delta(const OwnedGraph& g, Vertex v,
                               std::span<const Vertex> new_owned);

}  // namespace ncg

#endif  // NCG_GAME_H_
