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

#include "ncg/case_audit.h"

#include <algorithm>

#include "ncg/components.h"
#include "ncg/distances.h"
#include "ncg/equilibrium.h"
#include "ncg/error.h"
#include "ncg/spt.h"

namespace ncg {
namespace {

std::optional<EdgeKey> off_cycle_edge(const OwnedGraph& g,
                                      const BiconnectedComponent& h,
                                      const Cycle& c, Vertex v) {
  for (Vertex t : g.owned_targets(v)) {
    const EdgeKey e(v, t);
    if (h.contains_edge(e) && !c.contains_edge(e)) return e;
  }
  return std::nullopt;
}

int min_subtree(const OwnedGraph& g, Vertex root, Vertex pivot) {
  return subtree_bounds(g, root, pivot).min_size;
}

Rational q(std::int64_t v) { return Rational(v); }

}  // namespace

CaseAudit theorem_case_audit(const OwnedGraph& g, const Alpha& alpha,
                             const Budget& budget) {
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "case audit needs a connected graph");
  }
  const auto blocks = cyclic_components(g, {budget.cycle_candidates});
  if (blocks.empty()) {
    throw Error(ErrorCode::kPremiseFailure, "no cyclic biconnected component");
  }

  CaseAudit a;
  const BiconnectedComponent* h = nullptr;
  std::optional<Cycle> cycle;
  for (const auto& block : blocks) {
    for (const Cycle& c : block.longest_min_cycles()) {
      const int k = c.length();
      for (int i = 0; i < k && !cycle; ++i) {
        const auto f = off_cycle_edge(g, block, c, c.at(i));
        if (!f) continue;
        for (int j = i + 1; j < k; ++j) {
          const auto e = off_cycle_edge(g, block, c, c.at(j));
          if (!e || 3 * c.cycle_distance(i, j) < *block.k_max) continue;
          h = &block;
          cycle = c;
          a.r1 = c.at(i);
          a.r2 = c.at(j);
          a.f1 = *f;
          a.f2 = *e;
          break;
        }
      }
      if (cycle) break;
    }
    if (cycle) break;
  }
  if (!cycle) {
    throw Error(ErrorCode::kPremiseFailure,
                "no longest min-cycle has two off-cycle buyers at distance "
                ">= k_max/3");
  }
  const Cycle c = *cycle;
  a.cycle = c.vertices;
  a.k_max = *h->k_max;
  a.equilibrium = is_nash(g, alpha, budget).is_equilibrium;

  // P1 runs from r1 to r2 along the shorter side; orient it with the
  // purchases when they all point the other way.
  const int k = c.length();
  const int i1 = c.position(a.r1);
  const int i2 = c.position(a.r2);
  const int step = ((i2 - i1 + k) % k) <= k / 2 ? 1 : -1;
  std::vector<Vertex> path;
  for (int i = i1;; i += step) {
    path.push_back(c.at(i));
    if (c.at(i) == a.r2) break;
  }
  bool backward = true;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    backward = backward && g.owns(path[i + 1], path[i]);
  }
  if (backward) {
    std::reverse(path.begin(), path.end());
    std::swap(a.r1, a.r2);
    std::swap(a.f1, a.f2);
    a.notes.push_back("r1 and r2 swapped so P1 follows the purchases");
  }
  a.p1 = path;
  a.p1_length = static_cast<int>(path.size()) - 1;
  for (Vertex t : g.owned_targets(a.r1)) {
    if (c.contains_edge(EdgeKey(a.r1, t))) {
      a.e1 = EdgeKey(a.r1, t);
      break;
    }
  }
  if (!a.e1) a.notes.push_back("r1 buys no edge of C");

  // r3: the deepest vertex of H inside the minimal T_r1(r2).
  const DistanceMatrix dm(g);
  const auto classes = classify_vertex_subtree(g, a.r1, a.r2);
  const auto members = forced_members(classes);
  a.r3 = a.r2;
  for (Vertex t : members) {
    if (h->contains(t) && dm.at(a.r1, t) > dm.at(a.r1, a.r3)) a.r3 = t;
  }
  for (Vertex t : g.owned_targets(a.r3)) {
    if (h->contains_edge(EdgeKey(a.r3, t)) &&
        classes[t] != SptMembership::kForced) {
      a.f3 = EdgeKey(a.r3, t);
      break;
    }
  }

  const std::int64_t n1 = g.n() - 1;
  const Rational al = alpha.value();
  a.dist_sum_r1 = dm.row_sum(a.r1).value();
  a.dist_sum_r2 = dm.row_sum(a.r2).value();
  a.dist_sum_r3 = dm.row_sum(a.r3).value();
  a.d_r3_r2 = static_cast<int>(dm.at(a.r3, a.r2).value());
  a.subtree_r1_r2 = static_cast<int>(members.size());
  a.subtree_r3_r1 = min_subtree(g, a.r3, a.r1);
  a.subtree_r1_r3 = a.r3 == a.r1 ? 0 : min_subtree(g, a.r1, a.r3);
  const std::int64_t P = a.p1_length;
  const std::int64_t d = a.d_r3_r2;
  const std::int64_t kmax = a.k_max;
  const std::int64_t D1 = a.dist_sum_r1;
  const std::int64_t D2 = a.dist_sum_r2;
  const std::int64_t D3 = a.dist_sum_r3;
  const std::int64_t T12 = a.subtree_r1_r2;
  const std::int64_t T31 = a.subtree_r3_r1;
  const std::int64_t T13 = a.subtree_r1_r3;
  if (d > 0) a.gamma = Rational(d, P);

  // Case 1: some x in T_r1(r2) with D(r1) >= D(x).
  CaseRecord& c1 = a.cases[0];
  c1.case_id = 1;
  c1.description = "D(r1) >= D(x) for some x in T_r1(r2); 2 x (I) + (II)";
  {
    std::optional<Vertex> x;
    for (Vertex t : members) {
      if (!x || dm.row_sum(t) < dm.row_sum(*x)) x = t;
    }
    a.case1_x = x;
    const std::int64_t Dx = dm.row_sum(*x).value();
    c1.premise_holds = D1 >= Dx;
    const std::int64_t dx = dm.at(a.r2, *x).value();
    const std::int64_t Tx1 = min_subtree(g, *x, a.r1);
    const Rational s1 = q(Dx - D1 + n1 - (P + dx + 1) * Tx1);
    const Rational s2 = q(Dx - D1 + n1 + (kmax - P - dx - 3) * Tx1) - al;
    c1.value = 2 * s1 + s2;
  }

  // Case 2: d(r2, r3) >= k_max / 3.
  CaseRecord& c2 = a.cases[1];
  c2.case_id = 2;
  c2.description = "d(r2,r3) >= k_max/3; (I)/2 + (II) + 3(I')/2";
  c2.premise_holds = 3 * d >= kmax;
  {
    const Rational s3 = q(D3 - D1 + n1 - (P + d + 1) * T31);
    const Rational s4 = q(D3 - D1 + n1 + (kmax - P - d - 3) * T31) - al;
    const Rational s5 = q(D1 - D3 + n1 - (P + d + 1) * T13);
    c2.value = s3 / 2 + s4 + 3 * s5 / 2;
  }

  // Case 3: |T_r1(r2)| <= (n-1) / d(r3, r2).
  CaseRecord& c3 = a.cases[2];
  c3.case_id = 3;
  c3.description = "|T_r1(r2)| <= (n-1)/d(r3,r2); r2 swaps e2 and f2 for r2r1";
  c3.value = q(D1 - D2 + n1 + 2 * d * T12) - al;
  if (d > 0) c3.premise_holds = Rational(T12) <= Rational(n1, d);

  // Case 4: D(r1) - D(r3) <= -(2 - |P1|/d(r3,r2)) (n-1).
  CaseRecord& c4 = a.cases[3];
  c4.case_id = 4;
  c4.description =
      "D(r1)-D(r3) <= -(2-|P1|/d(r3,r2))(n-1); r3 swaps f3 for r3r1";
  c4.value = q(D1 - D3 + n1 - (P - d) * T12);
  if (d > 0) {
    c4.premise_holds =
        Rational(D1 - D3) <= -(Rational(2) - Rational(P, d)) * Rational(n1);
  }
  a.notes.push_back(
      "case 4 reads the unbound vertex u of its argument as r3");

  // Case 5: |T_r3(r1)| >= (3 - |P1|/d) (n-1) / (|P1| + d).
  CaseRecord& c5 = a.cases[4];
  c5.case_id = 5;
  c5.description =
      "|T_r3(r1)| >= (3-|P1|/d(r3,r2))(n-1)/(|P1|+d(r3,r2)); r1 swaps e1 for "
      "r1r3";
  c5.value = q(D3 - D1 + n1 - (P + d + 1) * T31);
  if (d > 0) {
    c5.premise_holds = Rational(T31) >= (Rational(3) - Rational(P, d)) *
                                            Rational(n1) / Rational(P + d);
  }

  // Case 6: none of the above.
  CaseRecord& c6 = a.cases[5];
  c6.case_id = 6;
  c6.description = "otherwise; r1 swaps e1 and f1 for r1r3";
  c6.value = q(D3 - D1 + n1 + (kmax - (P + d + 3)) * T31) - al;
  bool earlier = false;
  bool unknown = false;
  for (int i = 0; i < 5; ++i) {
    if (!a.cases[i].premise_holds) {
      unknown = true;
    } else if (*a.cases[i].premise_holds) {
      earlier = true;
    }
  }
  if (earlier) {
    c6.premise_holds = false;
  } else if (!unknown) {
    c6.premise_holds = true;
  }
  if (d > 0) a.notes.push_back("case 6 uses gamma = d(r3,r2)/|P1|");

  for (const CaseRecord& rec : a.cases) {
    if (rec.premise_holds.value_or(false)) {
      a.first_case = rec.case_id;
      break;
    }
  }
  return a;
}

}  // namespace ncg
