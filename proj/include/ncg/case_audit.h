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

#ifndef NCG_CASE_AUDIT_H_
#define NCG_CASE_AUDIT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncg/budget.h"
#include "ncg/owned_graph.h"
#include "ncg/rational.h"

namespace ncg {

struct CaseRecord {
  int case_id = 0;
  // Unset when the premise cannot be evaluated (division by d(r3, r2) = 0).
  std::optional<bool> premise_holds;
  // The inequality's right-hand side on the identified vertices. A value
  // below zero means the corresponding move strictly improves.
  std::optional<Rational> value;
  std::string description;
};

// Numeric walk through the six-case argument that equilibria with
// alpha > 3(n - 1) have no cycles. Diagnostic only: it identifies the
// vertices the argument names and evaluates each case on them.
struct CaseAudit {
  std::vector<Vertex> cycle;  // a longest min-cycle C of the component H
  int k_max = 0;
  Vertex r1 = 0;
  Vertex r2 = 0;
  Vertex r3 = 0;
  std::vector<Vertex> p1;  // shorter path of C from r1 to r2
  int p1_length = 0;
  std::optional<EdgeKey> e1;  // r1's edge on C
  EdgeKey f1;                 // r1's edge in H off C
  EdgeKey f2;                 // r2's edge in H off C
  std::optional<EdgeKey> f3;  // r3's edge in H leaving T_r1(r2)
  std::optional<Vertex> case1_x;
  std::optional<Rational> gamma;  // d(r3, r2) / |P1|

  std::int64_t dist_sum_r1 = 0;
  std::int64_t dist_sum_r2 = 0;
  std::int64_t dist_sum_r3 = 0;
  int d_r3_r2 = 0;
  int subtree_r1_r2 = 0;  // minimal |T_r1(r2)|
  int subtree_r3_r1 = 0;  // minimal |T_r3(r1)|
  int subtree_r1_r3 = 0;  // minimal |T_r1(r3)|

  bool equilibrium = false;
  std::array<CaseRecord, 6> cases;
  // Lowest case whose premise holds.
  std::optional<int> first_case;
  std::vector<std::string> notes;
};

// Throws Error(kPremiseFailure) when g has no cyclic biconnected component
// or no longest min-cycle carries two buyers of off-cycle edges at distance
// >= k_max / 3; kDisconnected for disconnected g.
CaseAudit theorem_case_audit(const OwnedGraph& g, const Alpha& alpha,
                             const Budget& budget = {});

}  // namespace ncg

#endif  // NCG_CASE_AUDIT_H_
