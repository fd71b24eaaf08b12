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

#include "ncg/dynamics.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "deviation_scorer.h"
#include "ncg/error.h"
#include "ncg/profiles.h"

namespace ncg {
namespace {

using internal::DeviationScorer;
using internal::Mask;

Cost cost(const DeviationScorer& s, Vertex v, Mask targets,
          const Alpha& alpha) {
  const std::int64_t d = s.dist_sum(v, targets);
  if (d < 0) return Cost::infinite();
  return Cost(alpha.value() * std::popcount(targets) + d);
}

bool size_lex_less(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  return DeviationScorer::to_vertices(a) < DeviationScorer::to_vertices(b);
}

// The move v makes under `policy`, if any.
std::optional<Mask> choose(const DeviationScorer& s, Vertex v,
                           const Alpha& alpha, DynamicsPolicy policy) {
  const Cost now = cost(s, v, s.owned_mask(v), alpha);
  const Mask eligible = s.eligible_mask(v);
  std::optional<Mask> pick;
  Cost pick_cost = now;
  for (Mask m = eligible;; m = (m - 1) & eligible) {
    const Cost c = cost(s, v, m, alpha);
    if (c < now) {
      if (policy == DynamicsPolicy::kFirstImprovement) {
        if (!pick || size_lex_less(m, *pick)) pick = m;
      } else if (!pick || c < pick_cost ||
                 (c == pick_cost && DeviationScorer::to_vertices(m) <
                                        DeviationScorer::to_vertices(*pick))) {
        pick = m;
        pick_cost = c;
      }
    }
    if (m == 0) break;
  }
  return pick;
}

}  // namespace

std::string_view to_string(DynamicsPolicy p) {
  return p == DynamicsPolicy::kBestResponse ? "BEST_RESPONSE"
                                            : "FIRST_IMPROVEMENT";
}

std::string_view to_string(DynamicsSchedule s) {
  return s == DynamicsSchedule::kRoundRobin ? "ROUND_ROBIN" : "RANDOM";
}

std::string_view to_string(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::kConverged:
      return "CONVERGED";
    case TerminalStatus::kBudgetExhausted:
      return "BUDGET_EXHAUSTED";
    case TerminalStatus::kCycleDetected:
      return "CYCLE_DETECTED";
  }
  return "?";
}

Trajectory dynamics(const OwnedGraph& start, const Alpha& alpha,
                    const DynamicsOptions& options) {
  if (start.n() > options.budget.max_deviation_n) {
    throw Error(ErrorCode::kBudgetExceeded,
                "dynamics needs n <= " +
                    std::to_string(options.budget.max_deviation_n));
  }
  if (options.max_rounds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_rounds must be positive");
  }
  std::mt19937_64 rng(options.seed);
  Trajectory t;
  t.final_profile = start;
  std::vector<Vertex> order(static_cast<std::size_t>(start.n()));
  std::iota(order.begin(), order.end(), 0);
  std::set<std::string> seen;

  for (int round = 0; round < options.max_rounds; ++round) {
    t.rounds = round;
    if (options.schedule == DynamicsSchedule::kRoundRobin &&
        !seen.insert(labeled_id(t.final_profile)).second) {
      t.status = TerminalStatus::kCycleDetected;
      return t;
    }
    if (options.schedule == DynamicsSchedule::kRandom) {
      std::shuffle(order.begin(), order.end(), rng);
    }
    bool moved = false;
    for (Vertex v : order) {
      const DeviationScorer scorer(t.final_profile);
      const auto pick = choose(scorer, v, alpha, options.policy);
      if (!pick) continue;
      DynamicsMove m;
      m.round = round;
      m.mover = v;
      m.deviation = DeviationScorer::to_vertices(*pick);
      m.delta = scorer.delta(v, *pick);
      t.final_profile = apply_deviation(t.final_profile, v, m.deviation);
      m.profile_id = labeled_id(t.final_profile);
      t.moves.push_back(std::move(m));
      moved = true;
    }
    if (!moved) {
      t.status = TerminalStatus::kConverged;
      return t;
    }
  }
  t.status = TerminalStatus::kBudgetExhausted;
  return t;
}

}  // namespace ncg
