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

#include "ncg/owned_graph.h"

#include <algorithm>
#include <string>

#include "ncg/error.h"

namespace ncg {
namespace {

std::string describe(const OwnedEdge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ",owner " +
         std::to_string(e.owner) + ")";
}

}  // namespace

OwnedGraph OwnedGraph::build(int n, std::span<const OwnedEdge> edges) {
  if (n < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative vertex count");
  }
  OwnedGraph g;
  g.n_ = n;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  g.owner_matrix_.assign(static_cast<std::size_t>(n) * n, -1);
  g.edges_.reserve(edges.size());
  for (const OwnedEdge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.owner < 0 ||
        e.owner >= n) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "edge " + describe(e) + " with n=" + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "edge " + describe(e));
    }
    if (e.owner != e.u && e.owner != e.v) {
      throw Error(ErrorCode::kOwnerNotEndpoint, "edge " + describe(e));
    }
    if (g.owner_matrix_[g.index(e.u, e.v)] >= 0) {
      throw Error(ErrorCode::kDuplicatePair, "edge " + describe(e));
    }
    g.owner_matrix_[g.index(e.u, e.v)] = e.owner;
    g.owner_matrix_[g.index(e.v, e.u)] = e.owner;
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.owner});
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

std::optional<Vertex> OwnedGraph::owner(Vertex x, Vertex y) const {
  const Vertex o = owner_matrix_[index(x, y)];
  if (o < 0) return std::nullopt;
  return o;
}

std::vector<Vertex> OwnedGraph::owned_targets(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex y : adjacency_[v]) {
    if (owns(v, y)) out.push_back(y);
  }
  return out;
}

int OwnedGraph::owned_count(Vertex v) const {
  int count = 0;
  for (Vertex y : adjacency_[v]) count += owns(v, y) ? 1 : 0;
  return count;
}

void OwnedGraph::check_vertex(Vertex v) const {
  if (!in_range(v)) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "vertex " + std::to_string(v) + " with n=" +
                    std::to_string(n_));
  }
}

void OwnedGraph::check_edge(const EdgeKey& e) const {
  check_vertex(e.a);
  check_vertex(e.b);
  if (e.a == e.b || !has_edge(e.a, e.b)) {
    throw Error(ErrorCode::kNoSuchEdge, "no edge {" + std::to_string(e.a) +
                                            "," + std::to_string(e.b) + "}");
  }
}

}  // namespace ncg
