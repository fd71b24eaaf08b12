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

#ifndef NCG_OWNED_GRAPH_H_
#define NCG_OWNED_GRAPH_H_

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace ncg {

using Vertex = int;

// An unordered vertex pair, stored with a < b.
struct EdgeKey {
  Vertex a = 0;
  Vertex b = 0;

  EdgeKey() = default;
  EdgeKey(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

  bool contains(Vertex v) const { return v == a || v == b; }
  Vertex other(Vertex v) const { return v == a ? b : a; }

  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

// An edge together with the endpoint that bought it.
struct OwnedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Vertex owner = 0;

  EdgeKey key() const { return EdgeKey(u, v); }
  Vertex target() const { return owner == u ? v : u; }

  friend auto operator<=>(const OwnedEdge&, const OwnedEdge&) = default;
};

// A strategy profile of the network creation game: an undirected simple graph
// on vertices 0..n-1 where every edge records which endpoint bought it. The
// strategy of v is the set of edges whose owner is v.
//
// Immutable after construction. Edges are normalized to u < v and kept sorted,
// so two graphs describing the same profile compare equal.
class OwnedGraph {
 public:
  OwnedGraph() = default;

  // Validates and builds. Throws Error with kSelfLoop, kDuplicatePair,
  // kOwnerNotEndpoint or kIndexOutOfRange.
  static OwnedGraph build(int n, std::span<const OwnedEdge> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const OwnedEdge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(Vertex x, Vertex y) const {
    return owner_matrix_[index(x, y)] >= 0;
  }
  // Owner of edge {x, y}, or nullopt when absent.
  std::optional<Vertex> owner(Vertex x, Vertex y) const;
  bool owns(Vertex buyer, Vertex other) const {
    return owner_matrix_[index(buyer, other)] == buyer;
  }

  // Other endpoints of the edges bought by v, ascending.
  std::vector<Vertex> owned_targets(Vertex v) const;
  int owned_count(Vertex v) const;

  bool in_range(Vertex v) const { return v >= 0 && v < n_; }
  // Throws Error(kIndexOutOfRange).
  void check_vertex(Vertex v) const;
  // Throws Error(kNoSuchEdge).
  void check_edge(const EdgeKey& e) const;

  friend bool operator==(const OwnedGraph& a, const OwnedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t index(Vertex x, Vertex y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(y);
  }

  int n_ = 0;
  std::vector<OwnedEdge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Vertex> owner_matrix_;  // -1 when absent
};

inline OwnedGraph build_graph(int n, std::span<const OwnedEdge> edges) {
  return OwnedGraph::build(n, edges);
}

}  // namespace ncg

#endif  // NCG_OWNED_GRAPH_H_
