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

#ifndef NCG_BUDGET_H_
#define NCG_BUDGET_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ncg {

// Enumeration caps. Exceeding one raises Error(kBudgetExceeded).
struct Budget {
  // Largest n for which all 2^(n-1) deviations of a vertex are enumerated.
  int max_deviation_n = 20;
  // Largest n for exhaustive labeled profile enumeration (3^(n(n-1)/2)).
  int max_labeled_n = 6;
  // Largest n for orbit-representative enumeration.
  int max_canonical_n = 6;
  // Largest n for which canonical ids are computed (n! permutations).
  int max_canonical_id_n = 8;
  // Overrides the default min-cycle candidate budget (16 * n * m).
  std::optional<std::size_t> cycle_candidates;
};

// Applies "key=value[,key=value...]" overrides. Keys: deviation_n,
// labeled_n, canonical_n, canonical_id_n, cycle_candidates. Throws
// Error(kParseError) on unknown keys or malformed values.
Budget apply_budget_overrides(Budget base, std::string_view spec);

// Applies the NCG_BUDGET environment variable when set.
Budget budget_from_environment(Budget base = {});

}  // namespace ncg

#endif  // NCG_BUDGET_H_
