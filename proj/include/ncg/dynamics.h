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

#ifndef NCG_DYNAMICS_H_
#define NCG_DYNAMICS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncg/budget.h"
#include "ncg/game.h"
#include "ncg/owned_graph.h"
#include "ncg/rational.h"

namespace ncg {

enum class DynamicsPolicy { kBestResponse, kFirstImprovement };
enum class DynamicsSchedule { kRoundRobin, kRandom };
enum class TerminalStatus { kConverged, kBudgetExhausted, kCycleDetected };

std::string_view to_string(DynamicsPolicy p);
std::string_view to_string(DynamicsSchedule s);
std::string_view to_string(TerminalStatus s);

struct DynamicsOptions {
  DynamicsPolicy policy = DynamicsPolicy::kBestResponse;
  DynamicsSchedule schedule = DynamicsSchedule::kRoundRobin;
  std::uint64_t seed = 0;
  int max_rounds = 100;
  Budget budget;
};

struct DynamicsMove {
  int round = 0;
  Vertex mover = 0;
  std::vector<Vertex> deviation;
  DeviationDelta delta;
  std::string profile_id;  // labeled id of the profile after the move
};

struct Trajectory {
  std::vector<DynamicsMove> moves;
  TerminalStatus status = TerminalStatus::kBudgetExhausted;
  // Index of the last round played; a round without moves ends the run.
  int rounds = 0;
  OwnedGraph final_profile;
};

// Rounds visit every vertex once (ascending, or shuffled per round with
// std::mt19937_64(seed)). A visited vertex moves when some deviation
// strictly lowers its cost: BEST_RESPONSE takes the lexicographically
// smallest minimizer, FIRST_IMPROVEMENT the first improving set by (size,
// lexicographic) order. A round-robin run that revisits a round-start
// profile stops with CYCLE_DETECTED. Throws Error(kBudgetExceeded).
Trajectory dynamics(const OwnedGraph& start, const Alpha& alpha,
                    const DynamicsOptions& options = {});

}  // namespace ncg

#endif  // NCG_DYNAMICS_H_
