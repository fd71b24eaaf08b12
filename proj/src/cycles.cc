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

#include "ncg/cycles.h"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "ncg/distances.h"
#include "ncg/error.h"

namespace ncg {

std::vector<EdgeKey> Cycle::edges() const {
  std::vector<EdgeKey> out;
  out.reserve(vertices.size());
  for (int i = 0; i < length(); ++i) out.emplace_back(at(i), at(i + 1));
  return out;
}

bool Cycle::contains(Vertex v) const { return position(v) >= 0; }

bool Cycle::contains_edge(const EdgeKey& e) const {
  const int i = position(e.a);
  if (i < 0) return false;
  return at(i + 1) == e.b || at(i - 1) == e.b;
}

int Cycle::cycle_distance(int i, int j) const {
  const int k = length();
  const int diff = (((i - j) % k) + k) % k;
  return std::min(diff, k - diff);
}

int Cycle::position(Vertex v) const {
  const auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1
                              : static_cast<int>(it - vertices.begin());
}

Cycle canonical_cycle(Cycle c) {
  if (c.vertices.empty()) return c;
  auto& vs = c.vertices;
  std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
  if (vs.size() > 2 && vs.back() < vs[1]) std::reverse(vs.begin() + 1, vs.end());
  return c;
}

Hops girth(const OwnedGraph& g) {
  Hops best = Hops::infinite();
  std::vector<int> level;
  std::vector<Vertex> parent;
  for (Vertex root = 0; root < g.n(); ++root) {
    level.assign(static_cast<std::size_t>(g.n()), -1);
    parent.assign(static_cast<std::size_t>(g.n()), -1);
    std::deque<Vertex> queue{root};
    level[root] = 0;
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (level[y] < 0) {
          level[y] = level[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, Hops(level[x] + level[y] + 1));
        }
      }
    }
  }
  return best;
}

bool is_min_cycle(const OwnedGraph& g, const Cycle& c) {
  const int k = c.length();
  for (int i = 0; i < k; ++i) {
    const auto d = distances_from(g, c.at(i));
    for (int j = i + 1; j < k; ++j) {
      if (d[c.at(j)] != Hops(c.cycle_distance(i, j))) return false;
    }
  }
  return true;
}

std::optional<Cycle> smallest_cycle_through(const OwnedGraph& g,
                                            const EdgeKey& e) {
  g.check_edge(e);
  auto path = shortest_path(g, e.a, e.b, Removal{std::nullopt, e});
  if (!path) return std::nullopt;
  return with_flags(g, Cycle{std::move(*path)});
}

namespace {

void validate_cycle(const OwnedGraph& g, const Cycle& c) {
  if (c.length() < 3) {
    throw Error(ErrorCode::kNotACycle, "fewer than three vertices");
  }
  std::set<Vertex> seen;
  for (Vertex v : c.vertices) {
    if (!g.in_range(v)) {
      throw Error(ErrorCode::kNotACycle,
                  "vertex " + std::to_string(v) + " out of range");
    }
    if (!seen.insert(v).second) {
      throw Error(ErrorCode::kNotACycle,
                  "repeated vertex " + std::to_string(v));
    }
  }
  for (int i = 0; i < c.length(); ++i) {
    if (!g.has_edge(c.at(i), c.at(i + 1))) {
      throw Error(ErrorCode::kNotACycle,
                  "missing edge {" + std::to_string(c.at(i)) + "," +
                      std::to_string(c.at(i + 1)) + "}");
    }
  }
}

}  // namespace

CycleClassification classify_cycle(const OwnedGraph& g, const Cycle& c) {
  validate_cycle(g, c);
  const int k = c.length();
  CycleClassification out;
  out.is_min = is_min_cycle(g, c);

  out.is_chordless = true;
  for (int i = 0; i < k && out.is_chordless; ++i) {
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(c.at(i), c.at(j))) {
        out.is_chordless = false;
        break;
      }
    }
  }

  bool forward = true;
  bool backward = true;
  for (int i = 0; i < k; ++i) {
    const Vertex owner = *g.owner(c.at(i), c.at(i + 1));
    forward = forward && owner == c.at(i);
    backward = backward && owner == c.at(i + 1);
  }
  out.is_directed = forward || backward;

  for (int i = 0; i < k; ++i) {
    int farthest = -1;
    std::vector<EdgeKey> edges;
    for (int j = 0; j < k; ++j) {
      const int d = std::min(c.cycle_distance(i, j), c.cycle_distance(i, j + 1));
      if (d > farthest) {
        farthest = d;
        edges.clear();
      }
      if (d == farthest) edges.emplace_back(c.at(j), c.at(j + 1));
    }
    std::sort(edges.begin(), edges.end());
    out.opposite_edges[c.at(i)] = std::move(edges);
  }
  return out;
}

Cycle with_flags(const OwnedGraph& g, Cycle c) {
  const CycleClassification cls = classify_cycle(g, c);
  c.is_min = cls.is_min;
  c.is_chordless = cls.is_chordless;
  c.is_directed = cls.is_directed;
  return c;
}

}  // namespace ncg
