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

#ifndef NCG_LEMMAS_H_
#define NCG_LEMMAS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/budget.h"
#include "ncg/components.h"
#include "ncg/cycles.h"
#include "ncg/owned_graph.h"
#include "ncg/rational.h"

namespace ncg {

enum class LemmaId {
  kMinCycle,
  kChordlessOpposite,
  kRemovalBound,
  kDirectedMinCycles,
  kGirthBound,
  kCeilingFloor,
  kSatelliteDisjoint,
  kOutEdge,
  kKeyLemma,
  kTree,
};

enum class LemmaVerdict { kPass, kFail, kVacuous };

std::string_view to_string(LemmaId id);
std::string_view to_string(LemmaVerdict verdict);

struct LemmaReport {
  LemmaId id = LemmaId::kMinCycle;
  // False when the lemma's premise does not hold; the verdict is then
  // VACUOUS and `reasons` says why.
  bool applicable = true;
  std::vector<std::string> reasons;
  LemmaVerdict verdict = LemmaVerdict::kVacuous;
  // Objects certifying a PASS or exhibiting a FAIL, keyed by role.
  std::map<std::string, std::string> witness;
  // For lemmas that assume an equilibrium: the conclusion evaluated on the
  // graph regardless of the premise. Unset when there is nothing to check.
  std::optional<bool> structural;
  std::optional<Rational> threshold;
  std::vector<std::string> notes;
};

struct LemmaSummary {
  int pass = 0;
  int fail = 0;
  int vacuous = 0;
};

LemmaSummary summarize(const std::vector<LemmaReport>& reports);

// Precomputed data shared by the checkers. `equilibrium` caches
// is_nash(graph, alpha) and is filled by make() when alpha is given.
struct LemmaInput {
  const OwnedGraph* graph = nullptr;
  std::vector<BiconnectedComponent> components;
  std::optional<Alpha> alpha;
  std::optional<bool> equilibrium;

  static LemmaInput make(const OwnedGraph& g, std::optional<Alpha> alpha,
                         const Budget& budget = {});
};

// 2 * alpha / (n - 1) + 2. Throws Error(kInvalidArgument) when n < 2.
Rational girth_threshold(int n, const Alpha& alpha);

// Structural statements, valid on every graph.
LemmaReport check_min_cycle_lemma(const LemmaInput& in);
LemmaReport check_chordless_and_opposite(const LemmaInput& in);
LemmaReport check_removal_bound(const LemmaInput& in);
LemmaReport check_satellite_disjoint(const LemmaInput& in);
// All rotations of all min-cycles of all cyclic components.
LemmaReport check_ceiling_floor(const LemmaInput& in);
// One min-cycle labelled v_0 = c.vertices[0]. Throws Error(kNotMinCycle).
LemmaReport check_ceiling_floor(const OwnedGraph& g, const Cycle& c);

// Statements about equilibria with alpha > 2(n - 1); in.alpha must be set.
LemmaReport check_directed_min_cycles(const LemmaInput& in);
LemmaReport check_girth_bound(const LemmaInput& in);
LemmaReport check_outedge(const LemmaInput& in);
LemmaReport check_key_lemma(const LemmaInput& in);
// Equilibria with alpha > 3(n - 1) are trees.
LemmaReport check_tree_theorem(const LemmaInput& in);

// Connected with exactly n - 1 edges.
bool check_tree(const OwnedGraph& g);

// Convenience forms building a LemmaInput.
LemmaReport check_min_cycle_lemma(const OwnedGraph& g);
LemmaReport check_chordless_and_opposite(const OwnedGraph& g);
LemmaReport check_removal_bound(const OwnedGraph& g);
LemmaReport check_satellite_disjoint(const OwnedGraph& g);
LemmaReport check_directed_min_cycles(const OwnedGraph& g, const Alpha& alpha);
LemmaReport check_girth_bound(const OwnedGraph& g, const Alpha& alpha);
LemmaReport check_outedge(const OwnedGraph& g, const Alpha& alpha);
LemmaReport check_key_lemma(const OwnedGraph& g, const Alpha& alpha);

// Every checker, in LemmaId order. Checker errors (e.g. a disconnected
// graph) become VACUOUS reports with the error as reason.
std::vector<LemmaReport> run_all(const LemmaInput& in);
std::vector<LemmaReport> run_all(const OwnedGraph& g, const Alpha& alpha,
                                 const Budget& budget = {});

}  // namespace ncg

#endif  // NCG_LEMMAS_H_
