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

#ifndef NCG_TESTS_SUPPORT_H_
#define NCG_TESTS_SUPPORT_H_

// Fixtures, random generators and naive oracles shared by the tests. The
// oracles only read the OwnedGraph accessors; every distance, deviation and
// tree they use is recomputed here from scratch.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ncg/owned_graph.h"
#include "ncg/rational.h"
#include "ncg/spt.h"

namespace ncg::testing {

// ---------------------------------------------------------------- fixtures

inline OwnedGraph make(int n, std::vector<OwnedEdge> edges) {
  return OwnedGraph::build(n, edges);
}

// Leaves 1..3 buy their edge to the center 0.
inline OwnedGraph star4() { return make(4, {{1, 0, 1}, {2, 0, 2}, {3, 0, 3}}); }

// v_i buys v_i v_{i+1}.
inline OwnedGraph directed_cycle(int k) {
  std::vector<OwnedEdge> e;
  for (int i = 0; i < k; ++i) e.push_back({i, (i + 1) % k, i});
  return make(k, e);
}
inline OwnedGraph cyc5() { return directed_cycle(5); }
inline OwnedGraph cyc4() { return directed_cycle(4); }

// v0 buys v0v1, v2 buys v2v1.
inline OwnedGraph path3() { return make(3, {{0, 1, 0}, {2, 1, 2}}); }

// Complete graph on 4 vertices, the lower index buys.
inline OwnedGraph k4lex() {
  std::vector<OwnedEdge> e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e.push_back({i, j, i});
  return make(4, e);
}

// Directed C5 plus vertex 5 buying an edge to v0.
inline OwnedGraph cyc5p() {
  std::vector<OwnedEdge> e;
  for (int i = 0; i < 5; ++i) e.push_back({i, (i + 1) % 5, i});
  e.push_back({5, 0, 5});
  return make(6, e);
}

// Vertices 0 and 1 joined by three 2-edge paths through 2, 3, 4.
inline OwnedGraph theta() {
  return make(5, {{0, 2, 0}, {2, 1, 2}, {0, 3, 0}, {3, 1, 3}, {0, 4, 0},
                  {4, 1, 4}});
}

// K4lex plus vertex 4 buying an edge to vertex 3.
inline OwnedGraph k4_pendant() {
  std::vector<OwnedEdge> e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) e.push_back({i, j, i});
  e.push_back({4, 3, 4});
  return make(5, e);
}

// ------------------------------------------------------- random generators

// Random graph where each pair is present with probability p and owned by a
// uniformly chosen endpoint.
inline OwnedGraph random_profile(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution coin(0.5);
  std::vector<OwnedEdge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) e.push_back({i, j, coin(rng) ? i : j});
  return make(n, e);
}

// Random spanning tree (each vertex attaches to an earlier one of a random
// permutation) plus each remaining pair with probability p.
inline OwnedGraph random_connected(std::mt19937_64& rng, int n, double p) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<bool>> present(
      static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  std::bernoulli_distribution coin(0.5);
  std::vector<OwnedEdge> e;
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    const int a = order[static_cast<std::size_t>(i)];
    const int b = order[static_cast<std::size_t>(pick(rng))];
    present[a][b] = present[b][a] = true;
    e.push_back({a, b, coin(rng) ? a : b});
  }
  std::bernoulli_distribution edge(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!present[i][j] && edge(rng)) e.push_back({i, j, coin(rng) ? i : j});
  return make(n, e);
}

inline Rational random_alpha(std::mt19937_64& rng, int n) {
  // Mix of integers, halves, thirds and small fractions up to ~3n.
  std::uniform_int_distribution<int> den(1, 4);
  const std::int64_t q = den(rng);
  std::uniform_int_distribution<std::int64_t> num(1, q * (3 * n + 2));
  return Rational(num(rng), q);
}

// "n: u-v/owner ..." for failure messages.
inline std::string describe(const OwnedGraph& g) {
  std::string out = std::to_string(g.n()) + ":";
  for (const OwnedEdge& e : g.edges()) {
    out += " " + std::to_string(e.u) + "-" + std::to_string(e.v) + "/" +
           std::to_string(e.owner);
  }
  return out;
}

// ---------------------------------------------------------------- oracles

constexpr int kUnreached = -1;

// owner[i][j] = buyer of {i, j} or -1.
inline std::vector<std::vector<int>> owner_matrix(const OwnedGraph& g) {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(g.n()),
                                  std::vector<int>(static_cast<std::size_t>(g.n()), -1));
  for (const OwnedEdge& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = e.owner;
  return m;
}

inline std::vector<int> bfs(const std::vector<std::vector<int>>& m, int src) {
  const int n = static_cast<int>(m.size());
  std::vector<int> d(static_cast<std::size_t>(n), kUnreached);
  std::vector<int> queue{src};
  d[src] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (int y = 0; y < n; ++y) {
      if (m[x][y] >= 0 && d[y] == kUnreached) {
        d[y] = d[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return d;
}

// Distance sum from v, or nullopt when something is unreachable.
inline std::optional<std::int64_t> dist_sum(const std::vector<std::vector<int>>& m,
                                            int v) {
  std::int64_t s = 0;
  for (int x : bfs(m, v)) {
    if (x == kUnreached) return std::nullopt;
    s += x;
  }
  return s;
}

// Cost change of a deviation: build * alpha + dist, dist possibly +-inf.
struct NaiveDelta {
  int build = 0;
  std::int64_t dist = 0;
  int dist_inf = 0;  // +1 / -1 when the distance change is infinite

  // Sign of the cost change at alpha: -1, 0 or +1.
  int sign_at(const Rational& alpha) const {
    if (dist_inf != 0) return dist_inf;
    const Rational c = Rational(build) * alpha + Rational(dist);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
};

// Targets v may buy: every other vertex that does not own an edge to v.
inline std::vector<int> naive_eligible(const std::vector<std::vector<int>>& m,
                                       int v) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(m.size()); ++x)
    if (x != v && m[v][x] != x) out.push_back(x);
  return out;
}

// Profile after v replaces its purchases by `targets`.
inline std::vector<std::vector<int>> naive_apply(std::vector<std::vector<int>> m,
                                                 int v,
                                                 const std::vector<int>& targets) {
  for (int x = 0; x < static_cast<int>(m.size()); ++x)
    if (m[v][x] == v) m[v][x] = m[x][v] = -1;
  for (int t : targets) m[v][t] = m[t][v] = v;
  return m;
}

inline int owned_by(const std::vector<std::vector<int>>& m, int v) {
  int c = 0;
  for (int x = 0; x < static_cast<int>(m.size()); ++x) c += m[v][x] == v;
  return c;
}

inline NaiveDelta naive_delta(const std::vector<std::vector<int>>& m, int v,
                              const std::vector<int>& targets) {
  const auto after = naive_apply(m, v, targets);
  NaiveDelta d;
  d.build = owned_by(after, v) - owned_by(m, v);
  const auto before_sum = dist_sum(m, v);
  const auto after_sum = dist_sum(after, v);
  if (after == m) return NaiveDelta{};
  if (!after_sum) {
    d.dist_inf = 1;  // still or newly disconnected: never an improvement
  } else if (!before_sum) {
    d.dist_inf = -1;
  } else {
    d.dist = *after_sum - *before_sum;
  }
  return d;
}

// Calls f(v, targets) for every vertex and every subset of its eligible
// targets, subsets in (size, lexicographic) order.
inline void for_each_naive_deviation(
    const std::vector<std::vector<int>>& m,
    const std::function<void(int, const std::vector<int>&)>& f) {
  const int n = static_cast<int>(m.size());
  for (int v = 0; v < n; ++v) {
    const auto el = naive_eligible(m, v);
    std::vector<std::vector<int>> subsets;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << el.size()); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < el.size(); ++i)
        if (mask >> i & 1) s.push_back(el[i]);
      subsets.push_back(s);
    }
    std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    for (const auto& s : subsets) f(v, s);
  }
}

struct NaiveVerdict {
  bool equilibrium = true;
  int vertex = -1;
  std::vector<int> deviation;
};

inline NaiveVerdict naive_is_nash(const OwnedGraph& g, const Rational& alpha) {
  const auto m = owner_matrix(g);
  NaiveVerdict out;
  for_each_naive_deviation(m, [&](int v, const std::vector<int>& s) {
    if (!out.equilibrium) return;
    if (naive_delta(m, v, s).sign_at(alpha) < 0) {
      out.equilibrium = false;
      out.vertex = v;
      out.deviation = s;
    }
  });
  return out;
}

// The alpha-interval as a plain record, built by intersecting half-lines.
struct NaiveInterval {
  bool empty = false;
  Rational lo{0};
  bool lo_closed = false;
  std::optional<Rational> hi;
  bool hi_closed = false;

  bool contains(const Rational& a) const {
    if (empty || a <= 0) return false;
    if (a < lo || (a == lo && !lo_closed)) return false;
    if (hi && (a > *hi || (a == *hi && !hi_closed))) return false;
    return true;
  }
};

inline NaiveInterval naive_interval(const OwnedGraph& g) {
  const auto m = owner_matrix(g);
  NaiveInterval iv;
  for_each_naive_deviation(m, [&](int v, const std::vector<int>& s) {
    const NaiveDelta d = naive_delta(m, v, s);
    if (d.dist_inf > 0) return;
    if (d.dist_inf < 0) {
      iv.empty = true;
      return;
    }
    // build * alpha + dist >= 0
    if (d.build == 0) {
      if (d.dist < 0) iv.empty = true;
    } else if (d.build > 0) {
      const Rational bound(-d.dist, d.build);
      if (bound > iv.lo) {
        iv.lo = bound;
        iv.lo_closed = true;
      }
    } else {
      const Rational bound(d.dist, -d.build);
      if (!iv.hi || bound < *iv.hi) {
        iv.hi = bound;
        iv.hi_closed = true;
      }
    }
  });
  if (iv.lo <= 0) {
    iv.lo = 0;
    iv.lo_closed = false;
  }
  if (iv.hi && (*iv.hi < iv.lo || (*iv.hi == iv.lo && !iv.lo_closed)))
    iv.empty = true;
  return iv;
}

// Minimum cost over all deviations of v.
inline std::optional<Rational> naive_best_cost(const OwnedGraph& g, int v,
                                               const Rational& alpha) {
  const auto m = owner_matrix(g);
  std::optional<Rational> best;
  for (const auto& t : [&] {
         std::vector<std::vector<int>> all;
         for_each_naive_deviation(m, [&](int x, const std::vector<int>& s) {
           if (x == v) all.push_back(s);
         });
         return all;
       }()) {
    const auto after = naive_apply(m, v, t);
    const auto ds = dist_sum(after, v);
    if (!ds) continue;
    const Rational c = alpha * Rational(owned_by(after, v)) + Rational(*ds);
    if (!best || c < *best) best = c;
  }
  return best;
}

// Every shortest path tree rooted at `root` as a parent array (-1 for the
// root and unreachable vertices).
inline std::vector<std::vector<int>> all_shortest_path_trees(const OwnedGraph& g,
                                                             int root) {
  const auto m = owner_matrix(g);
  const auto d = bfs(m, root);
  const int n = g.n();
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    if (x == root || d[x] == kUnreached) continue;
    for (int y = 0; y < n; ++y)
      if (m[x][y] >= 0 && d[y] == d[x] - 1) choices[x].push_back(y);
  }
  std::vector<std::vector<int>> trees;
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      trees.push_back(parent);
      return;
    }
    if (choices[x].empty()) {
      rec(x + 1);
      return;
    }
    for (int p : choices[x]) {
      parent[x] = p;
      rec(x + 1);
    }
    parent[x] = -1;
  };
  rec(0);
  return trees;
}

// Whether t lies below `pivot` in the tree (t == pivot counts).
inline bool below_vertex(const std::vector<int>& parent, int pivot, int t) {
  for (int x = t; x != -1; x = parent[x])
    if (x == pivot) return true;
  return false;
}

// Whether the tree uses edge tail->head and t lies below head.
inline bool below_edge(const std::vector<int>& parent, int tail, int head, int t) {
  return parent[head] == tail && below_vertex(parent, head, t);
}

// 0 = in every tree, 1 = in some, 2 = in none.
template <typename Pred>
int naive_membership(const std::vector<std::vector<int>>& trees, Pred in) {
  std::size_t hits = 0;
  for (const auto& t : trees) hits += in(t) ? 1 : 0;
  if (hits == trees.size()) return 0;
  return hits > 0 ? 1 : 2;
}

// Every simple cycle of length >= 3, each once, as a vertex sequence
// starting at its smallest vertex.
inline std::vector<std::vector<int>> all_simple_cycles(const OwnedGraph& g) {
  const auto m = owner_matrix(g);
  const int n = g.n();
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> used(static_cast<std::size_t>(n));
  std::function<void(int, int)> rec = [&](int start, int x) {
    for (int y = start; y < n; ++y) {
      if (m[x][y] < 0) continue;
      if (y == start && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(path);
      } else if (y > start && !used[y]) {
        used[y] = true;
        path.push_back(y);
        rec(start, y);
        path.pop_back();
        used[y] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(static_cast<std::size_t>(n), false);
    used[s] = true;
    rec(s, s);
  }
  return out;
}

// Cycle metric equals graph metric on every pair of cycle vertices.
inline bool naive_isometric(const OwnedGraph& g, const std::vector<int>& c) {
  const auto m = owner_matrix(g);
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    const auto d = bfs(m, c[i]);
    for (int j = 0; j < k; ++j) {
      const int along = std::min((i - j + k) % k, (j - i + k) % k);
      if (d[c[j]] != along) return false;
    }
  }
  return true;
}

// Whether some relabeling maps a onto b, ownership included.
inline bool naive_isomorphic(const OwnedGraph& a, const OwnedGraph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  const auto ma = owner_matrix(a);
  const auto mb = owner_matrix(b);
  std::vector<int> p(static_cast<std::size_t>(a.n()));
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; ok && i < a.n(); ++i)
      for (int j = 0; ok && j < a.n(); ++j) {
        const int o = ma[i][j];
        const int want = o < 0 ? -1 : p[o];
        ok = mb[p[i]][p[j]] == want;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline bool naive_connected(const OwnedGraph& g) {
  for (int x : bfs(owner_matrix(g), 0))
    if (x == kUnreached) return false;
  return true;
}

// Compares the library's subtree classification against every shortest path
// tree, for all roots, vertex pivots and tree-like edges of a connected
// graph. Returns the number of disagreeing (query, target) pairs and adds
// the number of compared pairs to *checks.
inline int spt_mismatches(const OwnedGraph& g, long* checks) {
  const auto m = owner_matrix(g);
  const int n = g.n();
  int bad = 0;
  for (int root = 0; root < n; ++root) {
    const auto trees = all_shortest_path_trees(g, root);
    const auto d = bfs(m, root);
    for (int pivot = 0; pivot < n; ++pivot) {
      if (pivot == root) continue;
      const auto classes = classify_vertex_subtree(g, root, pivot);
      for (int t = 0; t < n; ++t) {
        const int want = naive_membership(
            trees, [&](const auto& tr) { return below_vertex(tr, pivot, t); });
        bad += static_cast<int>(classes[t]) != want;
        ++*checks;
      }
    }
    for (const OwnedEdge& e : g.edges()) {
      for (const auto& [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (d[b] != d[a] + 1) continue;
        const auto classes = classify_edge_subtree(g, root, OrientedEdge{a, b});
        for (int t = 0; t < n; ++t) {
          const int want = naive_membership(
              trees, [&](const auto& tr) { return below_edge(tr, a, b, t); });
          bad += static_cast<int>(classes[t]) != want;
          ++*checks;
        }
      }
    }
  }
  return bad;
}

}  // namespace ncg::testing

#endif  // NCG_TESTS_SUPPORT_H_
