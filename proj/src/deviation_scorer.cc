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

#include "deviation_scorer.h"

#include <bit>
#include <string>
#include <utility>

#include "ncg/error.h"

namespace ncg::internal {

namespace {

std::vector<Mask> owned_masks(const OwnedGraph& g) {
  if (g.n() > 64) {
    throw Error(ErrorCode::kBudgetExceeded,
                "deviation scoring supports at most 64 vertices, got " +
                    std::to_string(g.n()));
  }
  std::vector<Mask> owned(static_cast<std::size_t>(g.n()), 0);
  for (const OwnedEdge& e : g.edges()) owned[e.owner] |= bit(e.target());
  return owned;
}

}  // namespace

DeviationScorer::DeviationScorer(const OwnedGraph& g)
    : DeviationScorer(g.n(), owned_masks(g)) {}

DeviationScorer::DeviationScorer(int n, std::vector<Mask> owned)
    : n_(n), owned_(std::move(owned)) {
  all_ = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
  adjacency_.assign(static_cast<std::size_t>(n_), 0);
  for (Vertex v = 0; v < n_; ++v) {
    for (Mask m = owned_[v]; m; m &= m - 1) {
      const Vertex t = std::countr_zero(m);
      adjacency_[v] |= bit(t);
      adjacency_[t] |= bit(v);
    }
  }
  eligible_.resize(static_cast<std::size_t>(n_));
  eligible_mask_.assign(static_cast<std::size_t>(n_), 0);
  current_.resize(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex u = 0; u < n_; ++u) {
      if (u != v && !(owned_[u] & bit(v))) {
        eligible_[v].push_back(u);
        eligible_mask_[v] |= bit(u);
      }
    }
    current_[v] = dist_sum(v, owned_[v]);
  }
}

Mask DeviationScorer::targets_of(Vertex v, std::uint64_t subset) const {
  Mask out = 0;
  const auto& el = eligible_[v];
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (subset & (std::uint64_t{1} << i)) out |= bit(el[i]);
  }
  return out;
}

std::int64_t DeviationScorer::dist_sum(Vertex v, Mask targets) const {
  const Mask vbit = bit(v);
  const Mask dropped = owned_[v];
  Mask visited = vbit;
  Mask frontier = vbit;
  std::int64_t sum = 0;
  std::int64_t level = 0;
  while (frontier) {
    ++level;
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) {
      const Vertex x = std::countr_zero(f);
      if (x == v) {
        next |= (adjacency_[v] & ~dropped) | targets;
      } else {
        Mask nb = adjacency_[x];
        if (dropped & bit(x)) nb &= ~vbit;
        if (targets & bit(x)) nb |= vbit;
        next |= nb;
      }
    }
    next &= ~visited;
    sum += level * std::popcount(next);
    visited |= next;
    frontier = next;
  }
  return visited == all_ ? sum : -1;
}

DeviationDelta DeviationScorer::delta(Vertex v, Mask targets) const {
  if (targets == owned_[v]) return {};
  DeviationDelta d;
  d.delta_build = std::popcount(targets) - std::popcount(owned_[v]);
  const std::int64_t after = dist_sum(v, targets);
  const std::int64_t before = current_[v];
  if (after < 0) {
    d.delta_dist = Hops::infinite();
  } else if (before < 0) {
    d.delta_dist = Hops::neg_infinite();
  } else {
    d.delta_dist = after - before;
  }
  return d;
}

std::vector<Vertex> DeviationScorer::to_vertices(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace ncg::internal
