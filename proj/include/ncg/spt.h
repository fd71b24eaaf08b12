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

#ifndef NCG_SPT_H_
#define NCG_SPT_H_

#include <optional>
#include <string_view>
#include <vector>

#include "ncg/owned_graph.h"

namespace ncg {

// Whether a target lies below a pivot in a shortest path tree rooted at some
// root, over all possible shortest path trees (tie-breaking choices):
//   kForced    - in every shortest path tree
//   kOptional  - in some but not all
//   kForbidden - in none
enum class SptMembership { kForced, kOptional, kForbidden };

std::string_view to_string(SptMembership m);

// An edge traversed away from the root: dist(root, head) = dist(root, tail)+1.
struct OrientedEdge {
  Vertex tail = 0;
  Vertex head = 0;

  EdgeKey key() const { return EdgeKey(tail, head); }
};

// Orientation of e that makes it a candidate shortest-path-tree edge from
// root, or nullopt when both endpoints are equidistant (or unreachable).
std::optional<OrientedEdge> tree_orientation(const OwnedGraph& g, Vertex root,
                                             const EdgeKey& e);

// Membership of every vertex in T_root(pivot). Unreachable targets are
// kForbidden. Throws kDegenerateQuery (pivot == root), kUnreachable (pivot not
// reachable from root), kIndexOutOfRange.
std::vector<SptMembership> classify_vertex_subtree(const OwnedGraph& g,
                                                   Vertex root, Vertex pivot);

// Membership of every vertex in T_root(e). Throws kNoSuchEdge,
// kNotTreeLikeOrientation, kUnreachable.
std::vector<SptMembership> classify_edge_subtree(const OwnedGraph& g,
                                                 Vertex root, OrientedEdge e);

// Single-target forms. These additionally throw kUnreachable when the target
// cannot be reached from the root.
SptMembership spt_membership_vertex(const OwnedGraph& g, Vertex root,
                                    Vertex pivot, Vertex target);
SptMembership spt_membership_edge(const OwnedGraph& g, Vertex root,
                                  OrientedEdge e, Vertex target);

// Smallest and largest subtree size realizable by an actual shortest path
// tree: the forced count and the forced-or-optional count.
struct SubtreeBounds {
  int min_size = 0;
  int max_size = 0;

  friend bool operator==(const SubtreeBounds&, const SubtreeBounds&) = default;
};

SubtreeBounds subtree_bounds(const OwnedGraph& g, Vertex root, Vertex pivot);
SubtreeBounds subtree_bounds(const OwnedGraph& g, Vertex root, OrientedEdge e);
SubtreeBounds subtree_bounds(const std::vector<SptMembership>& classes);

// Vertices classified kForced, ascending.
std::vector<Vertex> forced_members(const std::vector<SptMembership>& classes);
// Vertices classified kForced or kOptional, ascending.
std::vector<Vertex> possible_members(const std::vector<SptMembership>& classes);

}  // namespace ncg

#endif  // NCG_SPT_H_
