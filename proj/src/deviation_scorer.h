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

#ifndef NCG_SRC_DEVIATION_SCORER_H_
#define NCG_SRC_DEVIATION_SCORER_H_

#include <cstdint>
#include <vector>

#include "ncg/equilibrium.h"
#include "ncg/game.h"
#include "ncg/owned_graph.h"

namespace ncg::internal {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

// Bit-parallel evaluation of D(v) after v replaces its purchases. Works for
// n <= 64; the deviation budget caps n far below that.
class DeviationScorer {
 public:
  // Throws Error(kBudgetExceeded) when n > 64.
  explicit DeviationScorer(const OwnedGraph& g);
  // From purchase masks: owned[v] holds the targets v bought. The caller
  // guarantees a valid profile (no self loops, no pair bought twice).
  DeviationScorer(int n, std::vector<Mask> owned);

  int n() const { return n_; }

  // Targets v may buy: every u != v that did not itself buy {u, v}.
  const std::vector<Vertex>& eligible(Vertex v) const { return eligible_[v]; }
  Mask eligible_mask(Vertex v) const { return eligible_mask_[v]; }
  Mask owned_mask(Vertex v) const { return owned_[v]; }

  // Maps bit i of a subset index to eligible(v)[i].
  Mask targets_of(Vertex v, std::uint64_t subset) const;

  // D(v) once v owns exactly `targets`; -1 when some vertex is unreachable.
  std::int64_t dist_sum(Vertex v, Mask targets) const;
  std::int64_t current_dist_sum(Vertex v) const { return current_[v]; }

  DeviationDelta delta(Vertex v, Mask targets) const;

  static std::vector<Vertex> to_vertices(Mask m);

 private:
  int n_;
  Mask all_;
  std::vector<Mask> adjacency_;
  std::vector<Mask> owned_;
  std::vector<std::vector<Vertex>> eligible_;
  std::vector<Mask> eligible_mask_;
  std::vector<std::int64_t> current_;
};

// Exact Nash set of alpha for the scored profile. Single-edge swaps, sales
// and purchases run first so most non-equilibria are rejected cheaply.
AlphaInterval scorer_interval(const DeviationScorer& scorer);

}  // namespace ncg::internal

#endif  // NCG_SRC_DEVIATION_SCORER_H_
