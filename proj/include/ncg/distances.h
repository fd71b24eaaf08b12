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

#ifndef NCG_DISTANCES_H_
#define NCG_DISTANCES_H_

#include <optional>
#include <span>
#include <vector>

#include "ncg/extended.h"
#include "ncg/owned_graph.h"

namespace ncg {

// Parts of the graph a traversal must pretend are missing.
struct Removal {
  std::optional<Vertex> vertex;
  std::optional<EdgeKey> edge;

  bool blocks(Vertex from, Vertex to) const {
    if (vertex && (*vertex == to || *vertex == from)) return true;
    return edge && EdgeKey(from, to) == *edge;
  }
};

// Breadth-first hop distances from v. Ownership is ignored for traversal.
// Throws Error(kIndexOutOfRange).
std::vector<Hops> distances_from(const OwnedGraph& g, Vertex v,
                                 const Removal& removal = {});

// D(v): sum of hop distances from v to every other vertex, INFINITE when some
// vertex is unreachable.
Hops connection_cost(const OwnedGraph& g, Vertex v);

bool is_connected(const OwnedGraph& g);

// One shortest path from `from` to `to` (both included) with neighbors
// explored in ascending order, or nullopt when unreachable.
std::optional<std::vector<Vertex>> shortest_path(const OwnedGraph& g,
                                                 Vertex from, Vertex to,
                                                 const Removal& removal = {});

class DistanceMatrix {
 public:
  explicit DistanceMatrix(const OwnedGraph& g);

  int n() const { return n_; }
  const Hops& at(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Hops> row(Vertex u) const {
    return {dist_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }
  Hops row_sum(Vertex u) const;

 private:
  int n_;
  std::vector<Hops> dist_;
};

}  // namespace ncg

#endif  // NCG_DISTANCES_H_
