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

#include <doctest.h>

#include <random>
#include <set>

#include "ncg/components.h"
#include "ncg/cycles.h"
#include "ncg/distances.h"
#include "ncg/error.h"
#include "ncg/spt.h"
#include "support.h"

namespace ncg {
namespace {

using testing::cyc4;
using testing::cyc5;
using testing::cyc5p;
using testing::k4_pendant;
using testing::k4lex;
using testing::path3;
using testing::star4;
using testing::theta;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::kInvalidArgument;
}

std::vector<std::int64_t> finite(const std::vector<Hops>& d) {
  std::vector<std::int64_t> out;
  for (const Hops& h : d) out.push_back(h.value());
  return out;
}

TEST_CASE("build_graph validates its input") {
  const OwnedGraph s = star4();
  CHECK(s.n() == 4);
  CHECK(s.edge_count() == 3);
  CHECK(s.owns(1, 0));
  CHECK_FALSE(s.owns(0, 1));
  CHECK(s.owned_count(0) == 0);
  CHECK(s.owner(2, 0) == 2);
  CHECK_FALSE(s.owner(1, 2).has_value());

  const std::vector<OwnedEdge> loop{{0, 0, 0}};
  CHECK(code_of([&] { OwnedGraph::build(3, loop); }) == ErrorCode::kSelfLoop);
  const std::vector<OwnedEdge> dup{{0, 1, 0}, {1, 0, 1}};
  CHECK(code_of([&] { OwnedGraph::build(3, dup); }) ==
        ErrorCode::kDuplicatePair);
  const std::vector<OwnedEdge> stranger{{0, 1, 2}};
  CHECK(code_of([&] { OwnedGraph::build(3, stranger); }) ==
        ErrorCode::kOwnerNotEndpoint);
  const std::vector<OwnedEdge> outside{{0, 3, 0}};
  CHECK(code_of([&] { OwnedGraph::build(3, outside); }) ==
        ErrorCode::kIndexOutOfRange);
}

TEST_CASE("equal profiles compare equal regardless of edge order") {
  const std::vector<OwnedEdge> a{{0, 1, 0}, {2, 1, 2}};
  const std::vector<OwnedEdge> b{{1, 2, 2}, {1, 0, 0}};
  CHECK(OwnedGraph::build(3, a) == OwnedGraph::build(3, b));
}

TEST_CASE("distances_from and connection_cost") {
  CHECK(finite(distances_from(cyc5(), 0)) ==
        std::vector<std::int64_t>{0, 1, 2, 2, 1});
  CHECK(finite(distances_from(star4(), 0)) ==
        std::vector<std::int64_t>{0, 1, 1, 1});
  CHECK(connection_cost(cyc5(), 0) == Hops(6));
  CHECK(connection_cost(star4(), 0) == Hops(3));
  CHECK(connection_cost(path3(), 0) == Hops(3));

  const OwnedGraph split = testing::make(3, {{0, 1, 0}});
  CHECK(distances_from(split, 0)[2].is_infinite());
  CHECK(connection_cost(split, 0).is_infinite());
  CHECK_FALSE(is_connected(split));
  CHECK(code_of([&] { distances_from(split, 3); }) ==
        ErrorCode::kIndexOutOfRange);
}

TEST_CASE("removal hides a vertex or an edge") {
  const auto d = distances_from(cyc5(), 0, Removal{std::nullopt, EdgeKey(0, 1)});
  CHECK(d[1] == Hops(4));
  const auto dv = distances_from(cyc5(), 0, Removal{4, std::nullopt});
  CHECK(dv[3] == Hops(3));
  CHECK(dv[4].is_infinite());
}

TEST_CASE("shortest_path prefers low neighbors") {
  CHECK(shortest_path(cyc4(), 0, 2) == std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(shortest_path(testing::make(3, {{0, 1, 0}}), 0, 2).has_value());
}

TEST_CASE("vertex subtree membership") {
  CHECK(spt_membership_vertex(cyc5(), 2, 1, 0) == SptMembership::kForced);
  CHECK(spt_membership_vertex(cyc4(), 0, 1, 2) == SptMembership::kOptional);
  CHECK(spt_membership_vertex(cyc4(), 0, 1, 3) == SptMembership::kForbidden);
  CHECK(code_of([] { classify_vertex_subtree(cyc5(), 1, 1); }) ==
        ErrorCode::kDegenerateQuery);
  const OwnedGraph split = testing::make(3, {{0, 1, 0}});
  CHECK(code_of([&] { classify_vertex_subtree(split, 0, 2); }) ==
        ErrorCode::kUnreachable);
}

TEST_CASE("edge subtree membership") {
  const OrientedEdge e{0, 1};
  CHECK(spt_membership_edge(cyc5(), 0, e, 2) == SptMembership::kForced);
  // v3 is reached only through v4, so no tree puts it below v0v1.
  const auto trees = testing::all_shortest_path_trees(cyc5(), 0);
  CHECK(testing::naive_membership(trees, [](const auto& t) {
          return testing::below_edge(t, 0, 1, 3);
        }) == 2);
  CHECK(spt_membership_edge(cyc5(), 0, e, 3) == SptMembership::kForbidden);
  CHECK(spt_membership_edge(cyc5(), 0, e, 1) == SptMembership::kForced);
  CHECK(code_of([] { classify_edge_subtree(cyc5(), 0, OrientedEdge{1, 0}); }) ==
        ErrorCode::kNotTreeLikeOrientation);
  CHECK(code_of([] { classify_edge_subtree(cyc5(), 0, OrientedEdge{0, 2}); }) ==
        ErrorCode::kNoSuchEdge);
  CHECK(tree_orientation(cyc5(), 0, EdgeKey(1, 0))->head == 1);
  CHECK_FALSE(tree_orientation(cyc5(), 0, EdgeKey(2, 3)).has_value());
}

TEST_CASE("subtree bounds") {
  CHECK(subtree_bounds(cyc5(), 2, 0) == SubtreeBounds{1, 1});
  CHECK(subtree_bounds(cyc4(), 0, 1) == SubtreeBounds{1, 2});
  CHECK(subtree_bounds(star4(), 0, 1) == SubtreeBounds{1, 1});
}

TEST_CASE("girth") {
  CHECK(girth(cyc5()) == Hops(5));
  CHECK(girth(star4()).is_infinite());
  CHECK(girth(k4lex()) == Hops(3));
  CHECK(girth(theta()) == Hops(4));
}

TEST_CASE("biconnected decomposition") {
  const auto parts = biconnected_components(cyc5p());
  REQUIRE(parts.size() == 2);
  int cyclic = 0;
  for (const auto& c : parts) {
    if (c.is_cyclic) {
      ++cyclic;
      CHECK(c.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
      CHECK(c.k_max == 5);
    } else {
      CHECK(c.vertices == std::vector<Vertex>{0, 5});
    }
  }
  CHECK(cyclic == 1);
  CHECK(bridges(cyc5p()) == std::vector<EdgeKey>{EdgeKey(0, 5)});

  const auto star_parts = biconnected_components(star4());
  CHECK(star_parts.size() == 3);
  for (const auto& c : star_parts) CHECK_FALSE(c.is_cyclic);
  CHECK(cyclic_components(star4()).empty());

  const auto k4 = cyclic_components(k4lex());
  REQUIRE(k4.size() == 1);
  CHECK(k4[0].vertices.size() == 4);
  CHECK(k4[0].k_max == 3);
  CHECK(k4[0].min_cycles.size() == 4);
}

TEST_CASE("smallest cycle through an edge") {
  const auto c = smallest_cycle_through(cyc5(), EdgeKey(0, 1));
  REQUIRE(c.has_value());
  CHECK(c->length() == 5);
  CHECK(c->vertices.front() == 0);
  CHECK(c->vertices.back() == 1);
  CHECK(c->is_min);
  CHECK_FALSE(smallest_cycle_through(path3(), EdgeKey(0, 1)).has_value());
  CHECK(code_of([] { smallest_cycle_through(path3(), EdgeKey(0, 2)); }) ==
        ErrorCode::kNoSuchEdge);
}

TEST_CASE("min-cycle enumeration") {
  const auto c5 = cyclic_components(cyc5());
  REQUIRE(c5.size() == 1);
  REQUIRE(c5[0].min_cycles.size() == 1);
  CHECK(c5[0].min_cycles[0].length() == 5);

  const auto th = cyclic_components(theta());
  REQUIRE(th.size() == 1);
  CHECK(th[0].min_cycles.size() == 3);
  CHECK(th[0].k_max == 4);

  const auto bridge = biconnected_components(path3());
  CHECK(code_of([&] { enumerate_min_cycles(path3(), bridge[0]); }) ==
        ErrorCode::kComponentNotCyclic);
  MinCycleOptions tiny;
  tiny.candidate_budget = 1;
  CHECK(code_of([&] { cyclic_components(k4lex(), tiny); }) ==
        ErrorCode::kCandidateBudgetExceeded);
}

TEST_CASE("cycle classification") {
  const auto cls = classify_cycle(cyc5(), Cycle{{0, 1, 2, 3, 4}});
  CHECK(cls.is_min);
  CHECK(cls.is_chordless);
  CHECK(cls.is_directed);
  CHECK(cls.opposite_edges.at(0) == std::vector<EdgeKey>{EdgeKey(2, 3)});
  CHECK(classify_cycle(cyc4(), Cycle{{0, 1, 2, 3}}).opposite_edges.at(0).size() ==
        2);

  const auto square = classify_cycle(k4lex(), Cycle{{0, 1, 2, 3}});
  CHECK_FALSE(square.is_min);
  CHECK_FALSE(square.is_chordless);
  CHECK_FALSE(classify_cycle(k4lex(), Cycle{{0, 1, 2}}).is_directed);
  CHECK(code_of([] { classify_cycle(cyc5(), Cycle{{0, 1, 3}}); }) ==
        ErrorCode::kNotACycle);
}

TEST_CASE("canonical cycle rotation") {
  const Cycle c = canonical_cycle(Cycle{{3, 2, 1, 0, 4}});
  CHECK(c.vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("satellite sets") {
  const auto h = cyclic_components(cyc5p())[0];
  const auto s = satellite_sets(cyc5p(), h);
  CHECK(s.at(0) == std::vector<Vertex>{0, 5});
  CHECK(s.at(1) == std::vector<Vertex>{1});

  const auto plain = satellite_sets(cyc5(), cyclic_components(cyc5())[0]);
  for (const auto& [v, members] : plain) CHECK(members == std::vector<Vertex>{v});

  const auto kp = satellite_sets(k4_pendant(), cyclic_components(k4_pendant())[0]);
  CHECK(kp.at(3).size() == 2);
  CHECK(kp.at(0).size() == 1);

  const OwnedGraph split = testing::make(4, {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}});
  CHECK(code_of([&] { satellite_sets(split, cyclic_components(split)[0]); }) ==
        ErrorCode::kDisconnected);
}

// ------------------------------------------------------------- properties

TEST_CASE("distance axioms and row sums on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const OwnedGraph g = testing::random_profile(rng, n, 0.35);
    const DistanceMatrix d(g);
    const auto m = testing::owner_matrix(g);
    for (Vertex u = 0; u < n; ++u) {
      CHECK(d.at(u, u) == Hops(0));
      const auto naive = testing::bfs(m, u);
      for (Vertex v = 0; v < n; ++v) {
        CHECK(d.at(u, v) == d.at(v, u));
        if (naive[v] == testing::kUnreached) {
          CHECK(d.at(u, v).is_infinite());
        } else {
          CHECK(d.at(u, v) == Hops(naive[v]));
        }
        for (Vertex w = 0; w < n; ++w) CHECK(d.at(u, w) <= d.at(u, v) + d.at(v, w));
      }
      CHECK(connection_cost(g, u) == d.row_sum(u));
    }
  }
}

TEST_CASE("min-cycles are exactly the isometric simple cycles of each block") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const OwnedGraph g = testing::random_connected(rng, n, 0.3);
    std::set<std::vector<Vertex>> expected;
    for (const auto& c : testing::all_simple_cycles(g)) {
      if (testing::naive_isometric(g, c)) {
        expected.insert(canonical_cycle(Cycle{c}).vertices);
      }
    }
    std::set<std::vector<Vertex>> found;
    for (const auto& comp : cyclic_components(g)) {
      for (const auto& c : comp.min_cycles) {
        CHECK(c.is_min);
        CHECK(c.is_chordless);
        found.insert(c.vertices);
      }
    }
    CHECK(found == expected);
    // girth is the shortest simple cycle
    std::optional<int> shortest;
    for (const auto& c : testing::all_simple_cycles(g)) {
      const int k = static_cast<int>(c.size());
      if (!shortest || k < *shortest) shortest = k;
    }
    if (shortest) {
      CHECK(girth(g) == Hops(*shortest));
    } else {
      CHECK(girth(g).is_infinite());
    }
  }
}

TEST_CASE("bridges are the edges on no cycle") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const OwnedGraph g = testing::random_profile(rng, n, 0.3);
    std::set<EdgeKey> on_cycle;
    for (const auto& c : testing::all_simple_cycles(g)) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        on_cycle.insert(EdgeKey(c[i], c[(i + 1) % c.size()]));
      }
    }
    std::vector<EdgeKey> expected;
    for (const auto& e : g.edges()) {
      if (!on_cycle.count(e.key())) expected.push_back(e.key());
    }
    CHECK(bridges(g) == expected);
  }
}

TEST_CASE("subtree classification equals enumeration of all shortest path trees") {
  std::mt19937_64 rng(15);
  long checks = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const OwnedGraph g = testing::random_connected(rng, n, 0.4);
    INFO(testing::describe(g));
    CHECK(testing::spt_mismatches(g, &checks) == 0);
  }
  CHECK(checks > 1000);
}

}  // namespace
}  // namespace ncg
