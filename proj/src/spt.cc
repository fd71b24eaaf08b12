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

#include "ncg/spt.h"

#include <string>

#include "ncg/distances.h"
#include "ncg/error.h"

namespace ncg {

std::string_view to_string(SptMembership m) {
  switch (m) {
    case SptMembership::kForced: return "FORCED";
    case SptMembership::kOptional: return "OPTIONAL";
    case SptMembership::kForbidden: return "FORBIDDEN";
  }
  return "?";
}

std::optional<OrientedEdge> tree_orientation(const OwnedGraph& g, Vertex root,
                                             const EdgeKey& e) {
  g.check_vertex(root);
  g.check_edge(e);
  const auto d = distances_from(g, root);
  if (!d[e.a].is_finite()) return std::nullopt;
  if (d[e.b] == d[e.a] + Hops(1)) return OrientedEdge{e.a, e.b};
  if (d[e.a] == d[e.b] + Hops(1)) return OrientedEdge{e.b, e.a};
  return std::nullopt;
}

// A target t is below the pivot in some tree iff some shortest root->t path
// passes through the pivot, and in every tree iff every such path does, which
// is tested by deleting the pivot and re-running BFS.
std::vector<SptMembership> classify_vertex_subtree(const OwnedGraph& g,
                                                   Vertex root, Vertex pivot) {
  g.check_vertex(root);
  g.check_vertex(pivot);
  if (root == pivot) {
    throw Error(ErrorCode::kDegenerateQuery, "pivot equals root");
  }
  const auto from_root = distances_from(g, root);
  if (!from_root[pivot].is_finite()) {
    throw Error(ErrorCode::kUnreachable,
                "pivot " + std::to_string(pivot) + " unreachable from root");
  }
  const auto from_pivot = distances_from(g, pivot);
  const auto avoiding = distances_from(g, root, Removal{pivot, std::nullopt});

  std::vector<SptMembership> out(static_cast<std::size_t>(g.n()),
                                 SptMembership::kForbidden);
  for (Vertex t = 0; t < g.n(); ++t) {
    if (!from_root[t].is_finite()) continue;
    if (from_root[pivot] + from_pivot[t] != from_root[t]) continue;
    const bool forced = t == pivot || avoiding[t] > from_root[t];
    out[t] = forced ? SptMembership::kForced : SptMembership::kOptional;
  }
  return out;
}

std::vector<SptMembership> classify_edge_subtree(const OwnedGraph& g,
                                                 Vertex root, OrientedEdge e) {
  g.check_vertex(root);
  g.check_edge(e.key());
  const auto from_root = distances_from(g, root);
  if (!from_root[e.tail].is_finite()) {
    throw Error(ErrorCode::kUnreachable, "edge unreachable from root");
  }
  if (from_root[e.head] != from_root[e.tail] + Hops(1)) {
    throw Error(ErrorCode::kNotTreeLikeOrientation,
                "d(root," + std::to_string(e.head) + ") != d(root," +
                    std::to_string(e.tail) + ")+1");
  }
  const auto from_head = distances_from(g, e.head);
  const auto avoiding =
      distances_from(g, root, Removal{std::nullopt, e.key()});

  std::vector<SptMembership> out(static_cast<std::size_t>(g.n()),
                                 SptMembership::kForbidden);
  for (Vertex t = 0; t < g.n(); ++t) {
    if (!from_root[t].is_finite()) continue;
    if (from_root[e.tail] + Hops(1) + from_head[t] != from_root[t]) continue;
    out[t] = avoiding[t] > from_root[t] ? SptMembership::kForced
                                        : SptMembership::kOptional;
  }
  return out;
}

namespace {

void require_reachable(const OwnedGraph& g, Vertex root, Vertex target) {
  g.check_vertex(target);
  if (!distances_from(g, root)[target].is_finite()) {
    throw Error(ErrorCode::kUnreachable,
                "target " + std::to_string(target) + " unreachable from root");
  }
}

}  // namespace

SptMembership spt_membership_vertex(const OwnedGraph& g, Vertex root,
                                    Vertex pivot, Vertex target) {
  const auto classes = classify_vertex_subtree(g, root, pivot);
  require_reachable(g, root, target);
  return classes[target];
}

SptMembership spt_membership_edge(const OwnedGraph& g, Vertex root,
                                  OrientedEdge e, Vertex target) {
  const auto classes = classify_edge_subtree(g, root, e);
  require_reachable(g, root, target);
  return classes[target];
}

SubtreeBounds subtree_bounds(const std::vector<SptMembership>& classes) {
  SubtreeBounds b;
  for (SptMembership m : classes) {
    if (m == SptMembership::kForced) ++b.min_size;
    if (m != SptMembership::kForbidden) ++b.max_size;
  }
  return b;
}

SubtreeBounds subtree_bounds(const OwnedGraph& g, Vertex root, Vertex pivot) {
  return subtree_bounds(classify_vertex_subtree(g, root, pivot));
}

SubtreeBounds subtree_bounds(const OwnedGraph& g, Vertex root,
                             OrientedEdge e) {
  return subtree_bounds(classify_edge_subtree(g, root, e));
}

std::vector<Vertex> forced_members(const std::vector<SptMembership>& classes) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] == SptMembership::kForced) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

std::vector<Vertex> possible_members(
    const std::vector<SptMembership>& classes) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i] != SptMembership::kForbidden) {
      out.push_back(static_cast<Vertex>(i));
    }
  }
  return out;
}

}  // namespace ncg
