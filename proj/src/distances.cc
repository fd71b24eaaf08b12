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

#include "ncg/distances.h"

#include <algorithm>
#include <deque>

namespace ncg {
namespace {

// BFS returning raw levels (-1 unreachable) and parents (-1 none).
void bfs(const OwnedGraph& g, Vertex source, const Removal& removal,
         std::vector<int>& level, std::vector<Vertex>* parent) {
  level.assign(static_cast<std::size_t>(g.n()), -1);
  if (parent) parent->assign(static_cast<std::size_t>(g.n()), -1);
  if (removal.vertex && *removal.vertex == source) return;
  std::deque<Vertex> queue;
  level[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (level[y] >= 0 || removal.blocks(x, y)) continue;
      level[y] = level[x] + 1;
      if (parent) (*parent)[y] = x;
      queue.push_back(y);
    }
  }
}

}  // namespace

std::vector<Hops> distances_from(const OwnedGraph& g, Vertex v,
                                 const Removal& removal) {
  g.check_vertex(v);
  std::vector<int> level;
  bfs(g, v, removal, level, nullptr);
  std::vector<Hops> out(level.size());
  for (std::size_t i = 0; i < level.size(); ++i) {
    out[i] = level[i] < 0 ? Hops::infinite() : Hops(level[i]);
  }
  return out;
}

Hops connection_cost(const OwnedGraph& g, Vertex v) {
  Hops sum = 0;
  for (const Hops& d : distances_from(g, v)) sum = sum + d;
  return sum;
}

bool is_connected(const OwnedGraph& g) {
  if (g.n() <= 1) return true;
  return connection_cost(g, 0).is_finite();
}

std::optional<std::vector<Vertex>> shortest_path(const OwnedGraph& g,
                                                 Vertex from, Vertex to,
                                                 const Removal& removal) {
  g.check_vertex(from);
  g.check_vertex(to);
  std::vector<int> level;
  std::vector<Vertex> parent;
  bfs(g, from, removal, level, &parent);
  if (level[to] < 0) return std::nullopt;
  std::vector<Vertex> path;
  for (Vertex x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

DistanceMatrix::DistanceMatrix(const OwnedGraph& g) : n_(g.n()) {
  dist_.reserve(static_cast<std::size_t>(n_) * n_);
  for (Vertex u = 0; u < n_; ++u) {
    const auto row = distances_from(g, u);
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
}

Hops DistanceMatrix::row_sum(Vertex u) const {
  Hops sum = 0;
  for (const Hops& d : row(u)) sum = sum + d;
  return sum;
}

}  // namespace ncg
