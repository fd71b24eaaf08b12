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

#ifndef NCG_STRATEGIES_H_
#define NCG_STRATEGIES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/components.h"
#include "ncg/game.h"
#include "ncg/owned_graph.h"
#include "ncg/rational.h"

namespace ncg {

enum class StrategyKind { kI, kII, kIII };

std::string_view to_string(StrategyKind kind);

// coefficient * alpha + constant.
struct LinearInAlpha {
  Rational coefficient{0};
  Rational constant{0};

  Rational at(const Rational& alpha) const {
    return coefficient * alpha + constant;
  }
  friend bool operator==(const LinearInAlpha&, const LinearInAlpha&) = default;
};

// Outcome of one of the three canonical strategy changes of a vertex v
// toward a vertex u of the same biconnected component:
//   I    v swaps vw for vu,
//   II   v swaps both vw and a second edge e for vu,
//   III  v swaps all of its edges for vu.
// `bound` is the predicted upper bound on v's cost change and `exact` the
// true change of the literal move.
struct ResidualReport {
  StrategyKind kind = StrategyKind::kI;
  Vertex u = 0;
  Vertex v = 0;
  std::optional<Vertex> w;
  std::optional<EdgeKey> e;
  std::optional<Rational> alpha;

  // False with reasons when the move is well defined but falls outside the
  // setting the bound is stated for (e.g. uv already bought by v).
  bool preconditions_met = true;
  std::vector<std::string> reasons;

  LinearInAlpha bound;
  // Strategy II only: the looser form with |T_u(e)| replaced by |T_u(v)|.
  std::optional<LinearInAlpha> simplified_bound;
  DeviationDelta exact;
  std::vector<Vertex> new_owned;

  // Terms used in the bound.
  std::int64_t dist_sum_u = 0;
  std::int64_t dist_sum_v = 0;
  int d_uv = 0;
  int subtree_v = 0;  // minimal |T_u(v)|
  int subtree_e = 0;  // minimal |T_u(e)|, Strategy II
  int k_max = 0;
  int ell = 0;        // Strategy III
  int d_vw = 0;       // Strategy III
  // Strategy II: whether the smallest cycle through e is directed.
  std::optional<bool> e_cycle_directed;

  // The bound at `alpha`; throws Error(kInvalidArgument) when the bound
  // depends on alpha and none was given.
  Rational bound_value() const;
  std::optional<Rational> simplified_value() const;
  Cost exact_delta() const;
  // exact <= bound for every alpha > 0.
  bool sound_for_all_alpha() const;
};

// Each throws Error(kPreconditionFailed) when the move is not defined: u = v,
// no cyclic biconnected component holds u and v, uv was bought by u, v does
// not buy the named edges inside that component, or w is forced into
// T_u(v). Throws kIndexOutOfRange for bad vertices.
ResidualReport strategy_residual_I(const OwnedGraph& g, Vertex u, Vertex v,
                                   Vertex w);
ResidualReport strategy_residual_II(const OwnedGraph& g, Vertex u, Vertex v,
                                    Vertex w, const EdgeKey& e,
                                    const Alpha& alpha);
ResidualReport strategy_residual_III(const OwnedGraph& g, Vertex u, Vertex v,
                                     const Alpha& alpha);

// Variants that reuse precomputed components.
ResidualReport strategy_residual_I(
    const OwnedGraph& g, const std::vector<BiconnectedComponent>& components,
    Vertex u, Vertex v, Vertex w);
ResidualReport strategy_residual_II(
    const OwnedGraph& g, const std::vector<BiconnectedComponent>& components,
    Vertex u, Vertex v, Vertex w, const EdgeKey& e, const Alpha& alpha);
ResidualReport strategy_residual_III(
    const OwnedGraph& g, const std::vector<BiconnectedComponent>& components,
    Vertex u, Vertex v, const Alpha& alpha);

}  // namespace ncg

#endif  // NCG_STRATEGIES_H_
