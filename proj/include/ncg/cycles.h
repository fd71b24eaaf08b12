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

#ifndef NCG_CYCLES_H_
#define NCG_CYCLES_H_

#include <map>
#include <optional>
#include <vector>

#include "ncg/extended.h"
#include "ncg/owned_graph.h"

namespace ncg {

// A simple cycle v_0 .. v_{k-1} (closing edge v_{k-1} v_0). The flags are
// filled by classify_cycle / enumerate_min_cycles.
struct Cycle {
  std::vector<Vertex> vertices;
  bool is_min = false;
  bool is_chordless = false;
  bool is_directed = false;

  int length() const { return static_cast<int>(vertices.size()); }
  Vertex at(int i) const {
    const int k = length();
    return vertices[static_cast<std::size_t>(((i % k) + k) % k)];
  }
  std::vector<EdgeKey> edges() const;
  bool contains(Vertex v) const;
  bool contains_edge(const EdgeKey& e) const;
  // Hop distance along the cycle between positions i and j.
  int cycle_distance(int i, int j) const;
  int position(Vertex v) const;  // -1 when absent

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.vertices == b.vertices;
  }
};

// Rotates so the smallest vertex comes first and picks the direction whose
// second vertex is smaller. Flags are preserved.
Cycle canonical_cycle(Cycle c);

// Shortest cycle length ignoring ownership, INFINITE for forests.
Hops girth(const OwnedGraph& g);

// True iff the cycle's own hop metric matches graph distances on all pairs.
bool is_min_cycle(const OwnedGraph& g, const Cycle& c);

// A minimum-length cycle through e, or nullopt when e is a cut edge. The
// result starts with e.a and ends with e.b, with its flags filled in. Throws
// kNoSuchEdge.
std::optional<Cycle> smallest_cycle_through(const OwnedGraph& g,
                                            const EdgeKey& e);

struct CycleClassification {
  bool is_min = false;
  bool is_chordless = false;
  bool is_directed = false;
  // For each cycle vertex, the one (odd length) or two (even length) cycle
  // edges farthest from it along the cycle.
  std::map<Vertex, std::vector<EdgeKey>> opposite_edges;
};

// Throws kNotACycle when c is not a simple cycle of g.
CycleClassification classify_cycle(const OwnedGraph& g, const Cycle& c);

// classify_cycle and copy the flags into c.
Cycle with_flags(const OwnedGraph& g, Cycle c);

}  // namespace ncg

#endif  // NCG_CYCLES_H_
