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

#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "ncg/census.h"
#include "ncg/dynamics.h"
#include "ncg/equilibrium.h"
#include "ncg/error.h"
#include "ncg/profiles.h"
#include "ncg/report.h"
#include "support.h"

namespace ncg {
namespace {

using testing::cyc5;
using testing::path3;

constexpr EnumerationMode kLabeled = EnumerationMode::kLabeled;
constexpr EnumerationMode kCanonical = EnumerationMode::kCanonical;

const CensusRecord* find_record(const std::vector<CensusRecord>& records,
                                const std::string& id) {
  for (const CensusRecord& r : records) {
    if (r.canonical_id == id) return &r;
  }
  return nullptr;
}

TEST_CASE("profile words and codes") {
  CHECK(pair_count(4) == 6);
  CHECK(pair_index(4, 0, 1) == 0);
  CHECK(pair_index(4, 2, 3) == 5);
  CHECK(pair_index(4, 3, 2) == 5);
  CHECK(labeled_profile_count(2) == 3);
  CHECK(labeled_profile_count(3) == 27);
  CHECK_THROWS_AS(labeled_profile_count(13), Error);
  CHECK(labeled_id(cyc5()) == "5:1002100101");
  CHECK(decode_profile(5, encode_profile(cyc5())) == cyc5());
  CHECK(profile_from_word(5, profile_word(cyc5())) == cyc5());
  CHECK_THROWS_AS(encode_profile(testing::make(10, {})), Error);
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_profiles(2, kLabeled).size() == 3);
  CHECK(enumerate_profiles(3, kLabeled).size() == 27);
  CHECK(enumerate_profiles(2, kCanonical).size() == 2);
  // Directed graphs with at most one arc per pair, up to isomorphism.
  CHECK(enumerate_profiles(3, kCanonical).size() == 7);
  Budget small;
  small.max_labeled_n = 3;
  CHECK_THROWS_AS(enumerate_profiles(4, kLabeled, small), Error);
  std::uint64_t last = 0;
  bool ascending = true;
  bool first = true;
  for_each_profile(3, kLabeled, [&](const OwnedGraph& g) {
    const ProfileCode c = encode_profile(g);
    if (!first) ascending = ascending && c > last;
    first = false;
    last = c;
  });
  CHECK(ascending);
}

TEST_CASE("canonical ids match brute-force isomorphism") {
  for (int n = 2; n <= 4; ++n) {
    const auto all = enumerate_profiles(n, kLabeled);
    std::mt19937_64 rng(60 + n);
    const std::size_t pairs = n <= 3 ? all.size() * all.size() : 6000;
    for (std::size_t t = 0; t < pairs; ++t) {
      const OwnedGraph& a =
          n <= 3 ? all[t / all.size()] : all[rng() % all.size()];
      const OwnedGraph& b =
          n <= 3 ? all[t % all.size()] : all[rng() % all.size()];
      CHECK((canonical_id(a) == canonical_id(b)) ==
            testing::naive_isomorphic(a, b));
    }
  }
  // Each labeled class is the orbit of its representative.
  std::map<std::string, int> orbit;
  for (const OwnedGraph& g : enumerate_profiles(4, kLabeled)) ++orbit[canonical_id(g)];
  CHECK(orbit.size() == enumerate_profiles(4, kCanonical).size());
  Canonicalizer canon(4);
  for (const OwnedGraph& g : enumerate_profiles(4, kCanonical)) {
    std::uint64_t autos = 0;
    REQUIRE(canon.is_canonical(profile_word(g), &autos));
    CHECK(static_cast<std::uint64_t>(orbit[canonical_id(g)]) * autos == 24);
    CHECK(canonical_form(g) == g);
  }
  Budget small;
  small.max_canonical_id_n = 3;
  CHECK_THROWS_AS(canonical_id(cyc5(), small), Error);
}

TEST_CASE("permute relabels vertices") {
  const std::vector<Vertex> rot{1, 2, 3, 4, 0};
  const OwnedGraph r = permute(cyc5(), rot);
  CHECK(r.owns(1, 2));
  CHECK(r.owns(0, 1));
  CHECK(canonical_id(r) == canonical_id(cyc5()));
}

TEST_CASE("census on three vertices") {
  const CensusResult res = census(3);
  CHECK(res.summary.profiles_examined == 27);
  int non_tree = 0;
  for (const CensusRecord& r : res.records) {
    CHECK_FALSE(r.interval.empty());
    CHECK(r.is_tree == (r.edge_count == 2));
    if (r.is_tree) continue;
    ++non_tree;
    CHECK(r.edge_count == 3);
    CHECK(r.interval == AlphaInterval::between(0, false, Rational(1), true));
  }
  CHECK(non_tree == 2);  // transitive and cyclic orientations of the triangle
  CHECK(res.summary.theorem_violations.empty());
  CHECK(res.summary.conjecture_violations.empty());
  std::uint64_t labeled = 0;
  for (const CensusRecord& r : res.records) labeled += r.multiplicity;
  CHECK(labeled == res.summary.equilibrium_profiles);
}

TEST_CASE("census on five vertices contains the directed five-cycle") {
  CensusOptions opt;
  opt.mode = kCanonical;
  const CensusResult res = census(5, opt);
  const CensusRecord* c5 = find_record(res.records, canonical_id(cyc5()));
  REQUIRE(c5 != nullptr);
  CHECK(c5->interval == AlphaInterval::between(1, true, Rational(4), true));
  CHECK(c5->girth == Hops(5));
  CHECK(c5->k_max == 5);
  CHECK(c5->cyclic_components == 1);
  CHECK(res.summary.theorem_violations.empty());
  CHECK(res.summary.conjecture_violations.empty());
}

TEST_CASE("census filters") {
  CensusOptions opt;
  opt.alpha_filter = AlphaInterval::between(9, false, std::nullopt, false);
  for (const CensusRecord& r : census(4, opt).records) CHECK(r.is_tree);
  CensusOptions nt;
  nt.non_tree_only = true;
  for (const CensusRecord& r : census(4, nt).records) CHECK_FALSE(r.is_tree);
  Budget small;
  small.max_labeled_n = 3;
  CensusOptions capped;
  capped.budget = small;
  CHECK_THROWS_AS(census(4, capped), Error);
}

TEST_CASE("census intervals equal the naive oracle on four vertices") {
  CensusOptions opt;
  opt.mode = kCanonical;
  for (const CensusRecord& r : census(4, opt).records) {
    const testing::NaiveInterval naive = testing::naive_interval(r.representative);
    REQUIRE_FALSE(naive.empty);
    CHECK(r.interval.lower() == naive.lo);
    CHECK(r.interval.upper() == naive.hi);
  }
}

TEST_CASE("census sample points") {
  const auto closed =
      census_sample_points(AlphaInterval::between(1, true, Rational(4), true), 5);
  CHECK(closed.size() == 3);
  CHECK(closed.front() == Rational(1));
  CHECK(closed.back() == Rational(4));
  const AlphaInterval ray = AlphaInterval::between(1, true, std::nullopt, false);
  const auto pts = census_sample_points(ray, 5);
  CHECK(pts.back() == Rational(17));
  for (const Rational& a : pts) CHECK(ray.contains(a));
}

TEST_CASE("hunting non-tree equilibria") {
  const auto c5 = hunt_nontree(5, AlphaInterval::point(2));
  CHECK(find_record(c5, canonical_id(cyc5())) != nullptr);
  for (const CensusRecord& r : c5) CHECK_FALSE(r.is_tree);
  CHECK(hunt_nontree(4, AlphaInterval::point(10)).empty());
  const auto tri = hunt_nontree(3, AlphaInterval::point(1));
  CHECK(tri.size() == 2);
  CHECK(hunt_nontree(3, AlphaInterval::between(1, false, std::nullopt, false))
            .empty());
}

TEST_CASE("census output does not depend on the worker count") {
  CensusOptions opt;
  opt.run_lemmas = true;
  const std::string one = census_json(census(5, opt));
  for (int w : {2, 4, 8}) {
    opt.workers = w;
    CHECK(census_json(census(5, opt)) == one);
  }
}

TEST_CASE("checkpoint resume reproduces the full run") {
  const std::string path = "census_test_checkpoint.txt";
  std::remove(path.c_str());
  std::remove((path + ".records").c_str());
  CensusOptions opt;
  const std::string plain = census_json(census(5, opt));
  opt.checkpoint_path = path;
  CHECK(census_json(census(5, opt)) == plain);

  // Forget half of the completed partitions and resume.
  std::vector<std::string> done;
  {
    std::ifstream in(path);
    for (std::string line; std::getline(in, line);) done.push_back(line);
  }
  REQUIRE(done.size() > 2);
  {
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i < done.size() / 2; ++i) out << done[i] << '\n';
  }
  opt.workers = 3;
  CHECK(census_json(census(5, opt)) == plain);
  // Everything is loaded from the checkpoint on a second resume.
  CHECK(census_json(census(5, opt)) == plain);
  std::remove(path.c_str());
  std::remove((path + ".records").c_str());
}

TEST_CASE("census lemma blanket on four vertices") {
  CensusOptions opt;
  opt.run_lemmas = true;
  const CensusResult res = census(4, opt);
  CHECK(res.summary.lemma_failures == 0);
  for (const CensusRecord& r : res.records) {
    REQUIRE(r.lemmas.has_value());
    CHECK(r.lemmas->fail == 0);
    CHECK(r.lemma_failures.empty());
  }
}

// ------------------------------------------------------------- dynamics

TEST_CASE("dynamics examples") {
  const Trajectory still = dynamics(path3(), Alpha(2));
  CHECK(still.status == TerminalStatus::kConverged);
  CHECK(still.rounds == 0);
  CHECK(still.moves.empty());
  CHECK(still.final_profile == path3());

  const Trajectory sell = dynamics(cyc5(), Alpha(5));
  REQUIRE_FALSE(sell.moves.empty());
  CHECK(sell.moves[0].mover == 0);
  CHECK(sell.moves[0].deviation.empty());
  CHECK(sell.moves[0].delta == DeviationDelta{-1, Hops(4)});
  CHECK(to_string(TerminalStatus::kCycleDetected) == "CYCLE_DETECTED");

  DynamicsOptions capped;
  capped.max_rounds = 1;
  const Trajectory cut = dynamics(cyc5(), Alpha(5), capped);
  CHECK(cut.status == TerminalStatus::kBudgetExhausted);
  capped.max_rounds = 0;
  CHECK_THROWS_AS(dynamics(cyc5(), Alpha(5), capped), Error);
}

TEST_CASE("dynamics moves improve and convergence is an equilibrium") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const OwnedGraph g = testing::random_profile(rng, n, 0.4);
    const Rational a = testing::random_alpha(rng, n);
    DynamicsOptions opt;
    opt.policy = trial % 2 ? DynamicsPolicy::kFirstImprovement
                           : DynamicsPolicy::kBestResponse;
    opt.schedule =
        trial % 3 ? DynamicsSchedule::kRoundRobin : DynamicsSchedule::kRandom;
    opt.seed = rng();
    opt.max_rounds = 30;
    const Trajectory t = dynamics(g, Alpha(a), opt);
    OwnedGraph cur = g;
    for (const DynamicsMove& m : t.moves) {
      const OwnedGraph next = apply_deviation(cur, m.mover, m.deviation);
      const testing::NaiveDelta naive =
          testing::naive_delta(testing::owner_matrix(cur), m.mover, m.deviation);
      CHECK(naive.sign_at(a) < 0);
      CHECK(m.profile_id == labeled_id(next));
      cur = next;
    }
    CHECK(cur == t.final_profile);
    if (t.status == TerminalStatus::kConverged) {
      CHECK(is_nash(t.final_profile, Alpha(a)).is_equilibrium);
    }
    // Same inputs, same run.
    const Trajectory again = dynamics(g, Alpha(a), opt);
    CHECK(again.moves.size() == t.moves.size());
    CHECK(again.final_profile == t.final_profile);
  }
}

}  // namespace
}  // namespace ncg
