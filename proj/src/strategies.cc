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

#include "ncg/strategies.h"

#include <algorithm>
#include <string>

#include "ncg/cycles.h"
#include "ncg/distances.h"
#include "ncg/error.h"
#include "ncg/spt.h"

namespace ncg {
namespace {

[[noreturn]] void fail(const std::string& why) {
  throw Error(ErrorCode::kPreconditionFailed, why);
}

std::string edge_name(Vertex a, Vertex b) {
  return "{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

const BiconnectedComponent& shared_component(
    const std::vector<BiconnectedComponent>& components, Vertex u, Vertex v) {
  for (const BiconnectedComponent& c : components) {
    if (c.is_cyclic && c.contains(u) && c.contains(v)) return c;
  }
  fail("vertices " + std::to_string(u) + " and " + std::to_string(v) +
       " share no cyclic biconnected component");
}

// Shared set-up for all three moves. Fills the distance terms and returns
// the component holding u and v.
const BiconnectedComponent& prepare(
    const OwnedGraph& g, const std::vector<BiconnectedComponent>& components,
    ResidualReport& r) {
  g.check_vertex(r.u);
  g.check_vertex(r.v);
  if (r.u == r.v) fail("u and v coincide");
  if (!is_connected(g)) fail("profile is disconnected");
  const BiconnectedComponent& h = shared_component(components, r.u, r.v);
  if (g.owns(r.u, r.v)) {
    fail("edge " + edge_name(r.u, r.v) + " is bought by u");
  }
  if (g.owns(r.v, r.u)) {
    r.preconditions_met = false;
    r.reasons.push_back("edge " + edge_name(r.v, r.u) +
                        " already exists (bought by v)");
  }
  r.dist_sum_u = connection_cost(g, r.u).value();
  r.dist_sum_v = connection_cost(g, r.v).value();
  r.d_uv = static_cast<int>(distances_from(g, r.u)[r.v].value());
  return h;
}

void check_owned_in(const OwnedGraph& g, const BiconnectedComponent& h,
                    Vertex v, Vertex t) {
  if (!g.owns(v, t)) fail("v does not buy " + edge_name(v, t));
  if (!h.contains_edge(EdgeKey(v, t))) {
    fail("edge " + edge_name(v, t) + " lies outside the component");
  }
}

std::vector<Vertex> replaced(const OwnedGraph& g, Vertex v,
                             const std::vector<Vertex>& sold, Vertex bought) {
  std::vector<Vertex> out;
  for (Vertex t : g.owned_targets(v)) {
    if (std::find(sold.begin(), sold.end(), t) == sold.end()) out.push_back(t);
  }
  if (std::find(out.begin(), out.end(), bought) == out.end()) {
    out.push_back(bought);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// D(u) + (n-1) - D(v) - (d(u,v)+1) * |T_u(v)|.
Rational swap_core(const OwnedGraph& g, const ResidualReport& r) {
  return Rational(r.dist_sum_u + (g.n() - 1) - r.dist_sum_v -
                  static_cast<std::int64_t>(r.d_uv + 1) * r.subtree_v);
}

void fill_swap_terms(const OwnedGraph& g, ResidualReport& r) {
  const auto classes = classify_vertex_subtree(g, r.u, r.v);
  if (classes[*r.w] == SptMembership::kForced) {
    fail("w = " + std::to_string(*r.w) + " is forced into T_u(v)");
  }
  r.subtree_v = subtree_bounds(classes).min_size;
}

}  // namespace

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kI:
      return "I";
    case StrategyKind::kII:
      return "II";
    case StrategyKind::kIII:
      return "III";
  }
  return "?";
}

Rational ResidualReport::bound_value() const {
  if (bound.coefficient == Rational(0)) return bound.constant;
  if (!alpha) {
    throw Error(ErrorCode::kInvalidArgument, "bound depends on alpha");
  }
  return bound.at(*alpha);
}

std::optional<Rational> ResidualReport::simplified_value() const {
  if (!simplified_bound || !alpha) return std::nullopt;
  return simplified_bound->at(*alpha);
}

Cost ResidualReport::exact_delta() const {
  if (!exact.delta_dist.is_finite()) return exact.delta_dist.as<Rational>();
  if (exact.delta_build == 0) return Cost(Rational(exact.delta_dist.value()));
  if (!alpha) {
    throw Error(ErrorCode::kInvalidArgument, "exact change depends on alpha");
  }
  return exact.at(Alpha(*alpha));
}

bool ResidualReport::sound_for_all_alpha() const {
  if (!exact.delta_dist.is_finite()) return exact.delta_dist.is_neg_infinite();
  // Both sides are linear in alpha > 0: compare slope and intercept.
  return Rational(exact.delta_build) <= bound.coefficient &&
         Rational(exact.delta_dist.value()) <= bound.constant;
}

ResidualReport strategy_residual_I(
    const OwnedGraph& g, const std::vector<BiconnectedComponent>& components,
    Vertex u, Vertex v, Vertex w) {
  ResidualReport r;
  r.kind = StrategyKind::kI;
  r.u = u;
  r.v = v;
  r.w = w;
  g.check_vertex(w);
  const BiconnectedComponent& h = prepare(g, components, r);
  check_owned_in(g, h, v, w);
  if (w == u) fail("w equals u");
  fill_swap_terms(g, r);
  r.k_max = h.k_max.value_or(0);
  r.bound.constant = swap_core(g, r);
  r.new_owned = replaced(g, v, {w}, u);
  r.exact = deviation_delta(g, v, r.new_owned);
  return r;
}

ResidualReport strategy_residual_II(
    const OwnedGraph& g, const std::vector<BiconnectedComponent>& components,
    Vertex u, Vertex v, Vertex w, const EdgeKey& e, const Alpha& alpha) {
  ResidualReport r;
  r.kind = StrategyKind::kII;
  r.u = u;
  r.v = v;
  r.w = w;
  r.e = e;
  r.alpha = alpha.value();
  g.check_vertex(w);
  g.check_edge(e);
  const BiconnectedComponent& h = prepare(g, components, r);
  check_owned_in(g, h, v, w);
  if (w == u) fail("w equals u");
  if (!e.contains(v)) fail("e does not touch v");
  const Vertex x = e.other(v);
  if (x == w) fail("e coincides with vw");
  if (x == u) fail("e coincides with vu");
  check_owned_in(g, h, v, x);
  fill_swap_terms(g, r);
  r.k_max = h.k_max.value_or(0);

  // The detour around e must survive the sale of vw.
  const EdgeKey vw(v, w);
  const bool detour = std::any_of(
      h.min_cycles.begin(), h.min_cycles.end(), [&](const Cycle& c) {
        return c.contains_edge(e) && !c.contains_edge(vw);
      });
  if (!detour) {
    r.preconditions_met = false;
    r.reasons.push_back("every min-cycle through e also uses vw");
  }
  if (auto c = smallest_cycle_through(g, e)) {
    r.e_cycle_directed = c->is_directed;
  }
  if (auto oriented = tree_orientation(g, u, e)) {
    r.subtree_e = subtree_bounds(g, u, *oriented).min_size;
  }

  r.bound.coefficient = -1;
  r.bound.constant =
      swap_core(g, r) + Rational(static_cast<std::int64_t>(r.k_max - 2) *
                                 r.subtree_e);
  LinearInAlpha simple;
  simple.coefficient = -1;
  simple.constant = Rational(
      r.dist_sum_u + (g.n() - 1) - r.dist_sum_v +
      static_cast<std::int64_t>(r.k_max - r.d_uv - 3) * r.subtree_v);
  r.simplified_bound = simple;
  r.new_owned = replaced(g, v, {w, x}, u);
  r.exact = deviation_delta(g, v, r.new_owned);
  return r;
}

ResidualReport strategy_residual_III(
    const OwnedGraph& g, const std::vector<BiconnectedComponent>& components,
    Vertex u, Vertex v, const Alpha& alpha) {
  ResidualReport r;
  r.kind = StrategyKind::kIII;
  r.u = u;
  r.v = v;
  r.alpha = alpha.value();
  const BiconnectedComponent& h = prepare(g, components, r);
  const std::vector<Vertex> owned = g.owned_targets(v);
  if (owned.empty()) fail("v buys no edges");
  for (Vertex t : owned) {
    if (!h.contains_edge(EdgeKey(v, t))) {
      fail("v buys " + edge_name(v, t) + " outside the component");
    }
  }
  r.ell = static_cast<int>(owned.size());
  r.k_max = h.k_max.value_or(0);

  const auto classes = classify_vertex_subtree(g, u, v);
  r.subtree_v = subtree_bounds(classes).min_size;
  const auto from_u = distances_from(g, u);
  Vertex far = v;
  for (Vertex t : forced_members(classes)) {
    if (h.contains(t) && from_u[t] > from_u[far]) far = t;
  }
  r.w = far;
  r.d_vw = static_cast<int>(distances_from(g, v)[far].value());

  r.bound.coefficient = -(r.ell - 1);
  r.bound.constant = Rational(
      r.dist_sum_u + (g.n() - 1) - r.dist_sum_v +
      2 * static_cast<std::int64_t>(r.d_vw) * r.subtree_v);
  r.new_owned = {u};
  r.exact = deviation_delta(g, v, r.new_owned);
  return r;
}

ResidualReport strategy_residual_I(const OwnedGraph& g, Vertex u, Vertex v,
                                   Vertex w) {
  return strategy_residual_I(g, biconnected_components(g), u, v, w);
}

ResidualReport strategy_residual_II(const OwnedGraph& g, Vertex u, Vertex v,
                                    Vertex w, const EdgeKey& e,
                                    const Alpha& alpha) {
  return strategy_residual_II(g, biconnected_components(g), u, v, w, e, alpha);
}

ResidualReport strategy_residual_III(const OwnedGraph& g, Vertex u, Vertex v,
                                     const Alpha& alpha) {
  return strategy_residual_III(g, biconnected_components(g), u, v, alpha);
}

}  // namespace ncg
