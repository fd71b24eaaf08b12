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

#ifndef NCG_CENSUS_H_
#define NCG_CENSUS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncg/budget.h"
#include "ncg/equilibrium.h"
#include "ncg/extended.h"
#include "ncg/lemmas.h"
#include "ncg/owned_graph.h"
#include "ncg/profiles.h"

namespace ncg {

struct CensusOptions {
  EnumerationMode mode = EnumerationMode::kLabeled;
  int workers = 1;
  // Keep only records whose interval meets this set.
  std::optional<AlphaInterval> alpha_filter;
  bool non_tree_only = false;
  // Run every lemma checker at sample points of each record's interval.
  bool run_lemmas = false;
  // Resume file listing completed partitions; results of those partitions
  // live next to it in "<path>.records".
  std::optional<std::string> checkpoint_path;
  Budget budget;
};

// One isomorphism class of profiles that are equilibria for some alpha.
struct CensusRecord {
  std::string canonical_id;
  int n = 0;
  OwnedGraph representative;
  AlphaInterval interval;
  bool is_tree = false;
  int edge_count = 0;
  Hops girth = Hops::infinite();
  int cyclic_components = 0;
  std::optional<int> k_max;
  // Labeled profiles in the class that were enumerated.
  std::uint64_t multiplicity = 0;
  std::vector<Rational> sample_points;
  std::optional<LemmaSummary> lemmas;
  // "<lemma>@<alpha>" for each failing check.
  std::vector<std::string> lemma_failures;
};

struct CensusSummary {
  int n = 0;
  std::uint64_t profiles_examined = 0;
  // Labeled profiles with a nonempty interval.
  std::uint64_t equilibrium_profiles = 0;
  std::uint64_t classes = 0;
  // Non-tree classes whose interval meets (3(n-1), inf).
  std::vector<std::string> theorem_violations;
  // Non-tree classes whose interval meets [n, inf).
  std::vector<std::string> conjecture_violations;
  std::uint64_t lemma_failures = 0;
};

struct CensusResult {
  // Sorted by canonical id; filters applied.
  std::vector<CensusRecord> records;
  CensusSummary summary;
};

// Every profile on n vertices (or one per class), its exact Nash interval,
// and a record per class with a nonempty interval. The output is
// independent of the worker count. Throws Error(kBudgetExceeded).
CensusResult census(int n, const CensusOptions& options = {});

// Non-tree classes whose interval meets `query`.
std::vector<CensusRecord> hunt_nontree(int n, const AlphaInterval& query,
                                       CensusOptions options = {});

// Sample points used for lemma checks on an interval: its ends when closed,
// an interior point, and 2 max(lower, 1) + 3n for unbounded intervals.
std::vector<Rational> census_sample_points(const AlphaInterval& interval,
                                           int n);

}  // namespace ncg

#endif  // NCG_CENSUS_H_
