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

#include "ncg/components.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ncg/distances.h"
#include "ncg/error.h"

namespace ncg {

bool BiconnectedComponent::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool BiconnectedComponent::contains_edge(const EdgeKey& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<Cycle> BiconnectedComponent::longest_min_cycles() const {
  std::vector<Cycle> out;
  if (!k_max) return out;
  for (const Cycle& c : min_cycles) {
    if (c.length() == *k_max) out.push_back(c);
  }
  return out;
}

namespace {

// Hopcroft-Tarjan with an explicit stack; emits one edge set per block.
std::vector<std::vector<EdgeKey>> block_edge_sets(const OwnedGraph& g) {
  const int n = g.n();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<EdgeKey> edge_stack;
  std::vector<std::vector<EdgeKey>> blocks;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  int timer = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = timer++;
    std::vector<Frame> stack{{root, -1, 0}};
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex y = nbrs[f.next++];
        if (y == f.parent) continue;
        if (disc[y] < 0) {
          edge_stack.emplace_back(f.v, y);
          disc[y] = low[y] = timer++;
          stack.push_back({y, f.v, 0});
        } else if (disc[y] < disc[f.v]) {
          edge_stack.emplace_back(f.v, y);
          low[f.v] = std::min(low[f.v], disc[y]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex p = f.parent;
      stack.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<EdgeKey> block;
        const EdgeKey tree_edge(p, v);
        while (true) {
          const EdgeKey e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

// Enumerates candidate cycles from a root r through all pairs of shortest
// paths that meet at an opposite edge (odd length) or an opposite vertex
// (even length). Every isometric cycle whose smallest vertex is r arises
// this way because its two arcs from r are shortest paths.
class MinCycleSearch {
 public:
  MinCycleSearch(const OwnedGraph& g, const BiconnectedComponent& h,
                 std::size_t budget)
      : g_(g), h_(h), dist_(g), budget_(budget) {
    in_h_.assign(static_cast<std::size_t>(g.n()), false);
    for (Vertex v : h.vertices) in_h_[v] = true;
  }

  std::vector<Cycle> run() {
    std::set<std::vector<Vertex>> found;
    for (Vertex r : h_.vertices) search_root(r, found);
    std::vector<Cycle> out;
    for (const auto& vs : found) out.push_back(with_flags(g_, Cycle{vs}));
    std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.vertices < b.vertices;
    });
    return out;
  }

 private:
  using Path = std::vector<Vertex>;

  void charge() {
    if (++spent_ > budget_) {
      throw Error(ErrorCode::kCandidateBudgetExceeded,
                  "more than " + std::to_string(budget_) +
                      " min-cycle candidates");
    }
  }

  bool usable(Vertex r, Vertex p) const { return in_h_[p] && p > r; }

  std::vector<Vertex> predecessors(Vertex r, Vertex x) const {
    std::vector<Vertex> out;
    const Hops want = dist_.at(r, x) - Hops(1);
    for (Vertex p : g_.neighbors(x)) {
      if ((p == r || usable(r, p)) && dist_.at(r, p) == want) out.push_back(p);
    }
    return out;
  }

  const std::vector<Path>& paths_to(Vertex r, Vertex x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    std::vector<Path> out;
    if (x == r) {
      out.push_back({r});
    } else {
      for (Vertex p : predecessors(r, x)) {
        for (const Path& prefix : paths_to(r, p)) {
          charge();
          Path path = prefix;
          path.push_back(x);
          out.push_back(std::move(path));
        }
      }
    }
    return memo_.emplace(x, std::move(out)).first->second;
  }

  static bool disjoint_after_root(const Path& a, const Path& b) {
    for (std::size_t i = 1; i < a.size(); ++i) {
      for (std::size_t j = 1; j < b.size(); ++j) {
        if (a[i] == b[j]) return false;
      }
    }
    return true;
  }

  void consider(const Path& left, const Path& right,
                std::set<std::vector<Vertex>>& found) {
    charge();
    if (!disjoint_after_root(left, right)) return;
    Cycle c{left};
    for (auto it = right.rbegin(); it + 1 != right.rend(); ++it) {
      c.vertices.push_back(*it);
    }
    const int k = c.length();
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (dist_.at(c.at(i), c.at(j)) != Hops(c.cycle_distance(i, j))) return;
      }
    }
    found.insert(canonical_cycle(std::move(c)).vertices);
  }

  void search_root(Vertex r, std::set<std::vector<Vertex>>& found) {
    memo_.clear();
    // Odd cycles: an edge whose endpoints are equidistant from r.
    for (const EdgeKey& e : h_.edges) {
      if (!usable(r, e.a) || !usable(r, e.b)) continue;
      if (dist_.at(r, e.a) != dist_.at(r, e.b)) continue;
      for (const Path& left : paths_to(r, e.a)) {
        for (const Path& right : paths_to(r, e.b)) {
          consider(left, right, found);
        }
      }
    }
    // Even cycles: a vertex with two predecessors.
    for (Vertex z : h_.vertices) {
      if (!usable(r, z) || dist_.at(r, z) < Hops(2)) continue;
      const auto preds = predecessors(r, z);
      for (std::size_t i = 0; i < preds.size(); ++i) {
        for (std::size_t j = i + 1; j < preds.size(); ++j) {
          for (const Path& a : paths_to(r, preds[i])) {
            for (const Path& b : paths_to(r, preds[j])) {
              Path left = a;
              left.push_back(z);
              consider(left, b, found);
            }
          }
        }
      }
    }
  }

  const OwnedGraph& g_;
  const BiconnectedComponent& h_;
  DistanceMatrix dist_;
  std::vector<bool> in_h_;
  std::size_t budget_;
  std::size_t spent_ = 0;
  std::map<Vertex, std::vector<Path>> memo_;
};

}  // namespace

std::vector<Cycle> enumerate_min_cycles(const OwnedGraph& g,
                                        const BiconnectedComponent& component,
                                        const MinCycleOptions& options) {
  if (!component.is_cyclic) {
    throw Error(ErrorCode::kComponentNotCyclic,
                "component has no cycle");
  }
  const std::size_t budget = options.candidate_budget.value_or(
      16 * static_cast<std::size_t>(g.n()) *
      static_cast<std::size_t>(std::max(g.edge_count(), 1)));
  auto cycles = MinCycleSearch(g, component, budget).run();
  if (cycles.empty()) {
    throw std::logic_error("cyclic component without a min-cycle");
  }
  return cycles;
}

std::vector<BiconnectedComponent> biconnected_components(
    const OwnedGraph& g, const MinCycleOptions& options) {
  std::vector<BiconnectedComponent> out;
  for (auto& edges : block_edge_sets(g)) {
    BiconnectedComponent c;
    std::sort(edges.begin(), edges.end());
    std::set<Vertex> vs;
    for (const EdgeKey& e : edges) {
      vs.insert(e.a);
      vs.insert(e.b);
    }
    c.vertices.assign(vs.begin(), vs.end());
    c.edges = std::move(edges);
    c.is_cyclic = c.edges.size() > 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.vertices.front() != b.vertices.front()) {
      return a.vertices.front() < b.vertices.front();
    }
    return a.vertices < b.vertices;
  });
  for (auto& c : out) {
    if (!c.is_cyclic) continue;
    c.min_cycles = enumerate_min_cycles(g, c, options);
    int k = 0;
    for (const Cycle& cyc : c.min_cycles) k = std::max(k, cyc.length());
    c.k_max = k;
  }
  return out;
}

std::vector<BiconnectedComponent> cyclic_components(
    const OwnedGraph& g, const MinCycleOptions& options) {
  auto all = biconnected_components(g, options);
  std::erase_if(all, [](const auto& c) { return !c.is_cyclic; });
  return all;
}

std::vector<EdgeKey> bridges(const OwnedGraph& g) {
  std::vector<EdgeKey> out;
  for (const auto& edges : block_edge_sets(g)) {
    if (edges.size() == 1) out.push_back(edges.front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Vertex, std::vector<Vertex>> satellite_sets(
    const OwnedGraph& g, const BiconnectedComponent& component) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "satellite sets need a connected graph");
  }
  std::map<Vertex, std::vector<Vertex>> out;
  std::vector<std::vector<Hops>> rows;
  for (Vertex h : component.vertices) {
    out[h] = {};
    rows.push_back(distances_from(g, h));
  }
  for (Vertex x = 0; x < g.n(); ++x) {
    Hops best = Hops::infinite();
    std::vector<Vertex> nearest;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][x] < best) {
        best = rows[i][x];
        nearest.clear();
      }
      if (rows[i][x] == best) nearest.push_back(component.vertices[i]);
    }
    if (nearest.size() != 1) {
      throw std::logic_error("vertex " + std::to_string(x) +
                             " has several nearest component vertices");
    }
    out[nearest.front()].push_back(x);
  }
  return out;
}

}  // namespace ncg
