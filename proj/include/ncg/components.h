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

#ifndef NCG_COMPONENTS_H_
#define NCG_COMPONENTS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ncg/cycles.h"
#include "ncg/owned_graph.h"

namespace ncg {

// A block of the graph. Bridges are 2-vertex blocks with is_cyclic = false.
struct BiconnectedComponent {
  std::vector<Vertex> vertices;  // ascending
  std::vector<EdgeKey> edges;    // ascending
  bool is_cyclic = false;
  std::vector<Cycle> min_cycles;  // canonical, sorted by (length, vertices)
  std::optional<int> k_max;

  bool contains(Vertex v) const;
  bool contains_edge(const EdgeKey& e) const;
  // Min-cycles of maximum length.
  std::vector<Cycle> longest_min_cycles() const;
};

struct MinCycleOptions {
  // Maximum number of candidate cycles examined per component; defaults to
  // 16 * n * m.
  std::optional<std::size_t> candidate_budget;
};

// All min-cycles of a cyclic component. Throws kComponentNotCyclic and
// kCandidateBudgetExceeded.
std::vector<Cycle> enumerate_min_cycles(const OwnedGraph& g,
                                        const BiconnectedComponent& component,
                                        const MinCycleOptions& options = {});

// Biconnected decomposition, sorted by smallest vertex then size. Cyclic
// components carry their min-cycles and k_max.
std::vector<BiconnectedComponent> biconnected_components(
    const OwnedGraph& g, const MinCycleOptions& options = {});

// Only the cyclic components.
std::vector<BiconnectedComponent> cyclic_components(
    const OwnedGraph& g, const MinCycleOptions& options = {});

// The cut edges of g, ascending.
std::vector<EdgeKey> bridges(const OwnedGraph& g);

// S_H(v) for each v in H: the graph vertices whose nearest H-vertex is v.
// Throws kDisconnected. A vertex with two nearest H-vertices would contradict
// the block structure and raises std::logic_error.
std::map<Vertex, std::vector<Vertex>> satellite_sets(
    const OwnedGraph& g, const BiconnectedComponent& component);

}  // namespace ncg

#endif  // NCG_COMPONENTS_H_
