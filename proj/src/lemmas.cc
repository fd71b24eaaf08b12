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

#include "ncg/lemmas.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "ncg/distances.h"
#include "ncg/equilibrium.h"
#include "ncg/error.h"
#include "ncg/spt.h"

namespace ncg {
namespace {

std::string str(const EdgeKey& e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

std::string str(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << ']';
  return out.str();
}

std::string str(const Cycle& c) { return str(c.vertices); }

LemmaReport make_report(LemmaId id) {
  LemmaReport r;
  r.id = id;
  return r;
}

std::vector<const BiconnectedComponent*> cyclic(const LemmaInput& in) {
  std::vector<const BiconnectedComponent*> out;
  for (const auto& c : in.components) {
    if (c.is_cyclic) out.push_back(&c);
  }
  return out;
}

// Fills applicability for lemmas assuming an equilibrium with
// alpha > factor * (n - 1).
void equilibrium_premise(const LemmaInput& in, int factor, LemmaReport& r) {
  if (!in.alpha) {
    throw Error(ErrorCode::kInvalidArgument, "this lemma needs alpha");
  }
  const OwnedGraph& g = *in.graph;
  const bool eq = in.equilibrium ? *in.equilibrium
                                 : is_nash(g, *in.alpha).is_equilibrium;
  if (!eq) {
    r.reasons.push_back("not a Nash equilibrium at alpha = " +
                        to_string(*in.alpha));
  }
  const Rational limit(static_cast<std::int64_t>(factor) * (g.n() - 1));
  if (in.alpha->value() <= limit) {
    r.reasons.push_back("alpha <= " + std::to_string(factor) + "(n-1) = " +
                        to_string(limit));
  }
  r.applicable = r.reasons.empty();
}

// Verdict for an equilibrium lemma from its premise and structural result.
void settle(LemmaReport& r) {
  if (!r.applicable || !r.structural) {
    r.verdict = LemmaVerdict::kVacuous;
  } else {
    r.verdict = *r.structural ? LemmaVerdict::kPass : LemmaVerdict::kFail;
  }
}

// True iff some shortest path tree rooted at v holds every edge of c other
// than `skip`: each kept edge joins consecutive BFS layers and no vertex
// receives two parents.
bool tree_keeps_all_but(const OwnedGraph& g, const Cycle& c, const EdgeKey& skip,
                        const std::vector<Hops>& dist) {
  std::vector<int> parents(static_cast<std::size_t>(g.n()), 0);
  for (const EdgeKey& e : c.edges()) {
    if (e == skip) continue;
    const Hops da = dist[e.a];
    const Hops db = dist[e.b];
    if (da + Hops(1) != db && db + Hops(1) != da) return false;
    const Vertex child = da > db ? e.a : e.b;
    if (++parents[child] > 1) return false;
  }
  return true;
}

// A vertex of C buying an edge of H that is not on C, if any.
std::optional<EdgeKey> out_edge(const OwnedGraph& g,
                                const BiconnectedComponent& h, const Cycle& c,
                                Vertex v) {
  for (Vertex t : g.owned_targets(v)) {
    const EdgeKey e(v, t);
    if (h.contains_edge(e) && !c.contains_edge(e)) return e;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::kMinCycle:
      return "min_cycle";
    case LemmaId::kChordlessOpposite:
      return "chordless_opposite";
    case LemmaId::kRemovalBound:
      return "removal_bound";
    case LemmaId::kDirectedMinCycles:
      return "directed_min_cycles";
    case LemmaId::kGirthBound:
      return "girth_bound";
    case LemmaId::kCeilingFloor:
      return "ceiling_floor";
    case LemmaId::kSatelliteDisjoint:
      return "satellite_disjoint";
    case LemmaId::kOutEdge:
      return "out_edge";
    case LemmaId::kKeyLemma:
      return "key_lemma";
    case LemmaId::kTree:
      return "tree";
  }
  return "?";
}

std::string_view to_string(LemmaVerdict verdict) {
  switch (verdict) {
    case LemmaVerdict::kPass:
      return "PASS";
    case LemmaVerdict::kFail:
      return "FAIL";
    case LemmaVerdict::kVacuous:
      return "VACUOUS";
  }
  return "?";
}

LemmaSummary summarize(const std::vector<LemmaReport>& reports) {
  LemmaSummary s;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case LemmaVerdict::kPass:
        ++s.pass;
        break;
      case LemmaVerdict::kFail:
        ++s.fail;
        break;
      case LemmaVerdict::kVacuous:
        ++s.vacuous;
        break;
    }
  }
  return s;
}

LemmaInput LemmaInput::make(const OwnedGraph& g, std::optional<Alpha> alpha,
                            const Budget& budget) {
  LemmaInput in;
  in.graph = &g;
  in.components = biconnected_components(g, {budget.cycle_candidates});
  in.alpha = alpha;
  if (alpha) in.equilibrium = is_nash(g, *alpha, budget).is_equilibrium;
  return in;
}

Rational girth_threshold(int n, const Alpha& alpha) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "girth threshold needs n >= 2");
  }
  return 2 * alpha.value() / Rational(n - 1) + 2;
}

bool check_tree(const OwnedGraph& g) {
  return g.n() >= 1 && is_connected(g) && g.edge_count() == g.n() - 1;
}

LemmaReport check_min_cycle_lemma(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kMinCycle);
  const OwnedGraph& g = *in.graph;
  int checked = 0;
  for (const BiconnectedComponent* h : cyclic(in)) {
    for (const EdgeKey& e : h->edges) {
      const auto c = smallest_cycle_through(g, e);
      if (!c) throw std::logic_error("edge of a cyclic block lies on no cycle");
      ++checked;
      if (!c->is_min) {
        r.verdict = LemmaVerdict::kFail;
        r.witness = {{"edge", str(e)}, {"cycle", str(*c)}};
        return r;
      }
    }
  }
  if (checked == 0) {
    r.reasons.push_back("no edge lies on a cycle");
    r.applicable = false;
    return r;
  }
  r.verdict = LemmaVerdict::kPass;
  r.witness = {{"edges_checked", std::to_string(checked)}};
  return r;
}

LemmaReport check_chordless_and_opposite(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kChordlessOpposite);
  const OwnedGraph& g = *in.graph;
  int checked = 0;
  for (const BiconnectedComponent* h : cyclic(in)) {
    for (const Cycle& c : h->min_cycles) {
      ++checked;
      const CycleClassification cls = classify_cycle(g, c);
      if (!cls.is_chordless) {
        r.verdict = LemmaVerdict::kFail;
        r.witness = {{"cycle", str(c)}, {"defect", "chord"}};
        return r;
      }
      for (Vertex v : c.vertices) {
        const auto dist = distances_from(g, v);
        const auto& opposite = cls.opposite_edges.at(v);
        const bool ok =
            std::any_of(opposite.begin(), opposite.end(), [&](const EdgeKey& o) {
              return tree_keeps_all_but(g, c, o, dist);
            });
        if (!ok) {
          r.verdict = LemmaVerdict::kFail;
          r.witness = {{"cycle", str(c)},
                       {"vertex", std::to_string(v)},
                       {"defect", "no shortest path tree misses only an "
                                  "opposite edge"}};
          return r;
        }
      }
    }
  }
  if (checked == 0) {
    r.applicable = false;
    r.reasons.push_back("no min-cycles");
    return r;
  }
  r.verdict = LemmaVerdict::kPass;
  r.witness = {{"cycles_checked", std::to_string(checked)}};
  return r;
}

LemmaReport check_removal_bound(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kRemovalBound);
  const OwnedGraph& g = *in.graph;
  std::optional<std::int64_t> best_slack;
  for (const BiconnectedComponent* h : cyclic(in)) {
    const std::int64_t k_max = h->k_max.value();
    for (const EdgeKey& e : h->edges) {
      const Hops after = distances_from(g, e.a, Removal{std::nullopt, e})[e.b];
      const Hops allowed = Hops(1 + k_max - 2);
      if (after > allowed) {
        r.verdict = LemmaVerdict::kFail;
        std::ostringstream a;
        a << after;
        r.witness = {{"edge", str(e)},
                     {"distance_after_removal", a.str()},
                     {"allowed", std::to_string(allowed.value())}};
        return r;
      }
      const std::int64_t slack = allowed.value() - after.value();
      if (!best_slack || slack < *best_slack) {
        best_slack = slack;
        r.witness = {{"tightest_edge", str(e)},
                     {"distance_after_removal", std::to_string(after.value())},
                     {"allowed", std::to_string(allowed.value())}};
      }
    }
  }
  if (!best_slack) {
    r.applicable = false;
    r.reasons.push_back("no cyclic biconnected component");
    r.witness.clear();
    return r;
  }
  r.verdict = LemmaVerdict::kPass;
  return r;
}

LemmaReport check_satellite_disjoint(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kSatelliteDisjoint);
  const OwnedGraph& g = *in.graph;
  if (!is_connected(g)) {
    throw Error(ErrorCode::kDisconnected, "satellite sets need a connected graph");
  }
  const DistanceMatrix dm(g);
  int checked = 0;
  for (const BiconnectedComponent* h : cyclic(in)) {
    ++checked;
    // x lies in S_H(v) when no vertex of H is strictly closer to x than v.
    for (Vertex x = 0; x < g.n(); ++x) {
      Hops best = Hops::infinite();
      for (Vertex v : h->vertices) best = std::min(best, dm.at(x, v));
      std::vector<Vertex> owners;
      for (Vertex v : h->vertices) {
        if (dm.at(x, v) == best) owners.push_back(v);
      }
      if (owners.size() > 1) {
        r.verdict = LemmaVerdict::kFail;
        r.witness = {{"vertex", std::to_string(x)},
                     {"component", str(h->vertices)},
                     {"shared_by", str(owners)}};
        return r;
      }
    }
  }
  if (checked == 0) {
    r.applicable = false;
    r.reasons.push_back("no cyclic biconnected component");
    return r;
  }
  r.verdict = LemmaVerdict::kPass;
  r.witness = {{"components_checked", std::to_string(checked)}};
  return r;
}

LemmaReport check_ceiling_floor(const OwnedGraph& g, const Cycle& c) {
  if (c.length() < 3 || !is_min_cycle(g, c)) {
    throw Error(ErrorCode::kNotMinCycle, str(c) + " is not a min-cycle");
  }
  LemmaReport r = make_report(LemmaId::kCeilingFloor);
  const int k = c.length();
  const Vertex v0 = c.at(0);
  const Vertex floor_root = c.at(k / 2);
  const Vertex ceil_root = c.at((k + 1) / 2);
  const auto a = classify_vertex_subtree(g, floor_root, v0);
  r.witness["cycle"] = str(c);
  if (floor_root == ceil_root) {
    r.verdict = LemmaVerdict::kPass;
    r.witness["common_subtree"] = str(forced_members(a));
    r.notes.push_back("even length: both roots coincide");
    return r;
  }
  const auto b = classify_vertex_subtree(g, ceil_root, v0);
  const auto within = [](const std::vector<SptMembership>& forced_side,
                         const std::vector<SptMembership>& other) {
    for (std::size_t t = 0; t < forced_side.size(); ++t) {
      if (forced_side[t] == SptMembership::kForced &&
          other[t] == SptMembership::kForbidden) {
        return static_cast<Vertex>(t);
      }
    }
    return Vertex{-1};
  };
  const Vertex bad_a = within(a, b);
  const Vertex bad_b = within(b, a);
  if (bad_a >= 0 || bad_b >= 0) {
    r.verdict = LemmaVerdict::kFail;
    r.witness["vertex"] = std::to_string(bad_a >= 0 ? bad_a : bad_b);
    r.witness["forced_under_root"] =
        std::to_string(bad_a >= 0 ? floor_root : ceil_root);
    return r;
  }
  std::set<Vertex> common;
  for (Vertex t : forced_members(a)) common.insert(t);
  for (Vertex t : forced_members(b)) common.insert(t);
  r.verdict = LemmaVerdict::kPass;
  r.witness["common_subtree"] =
      str(std::vector<Vertex>(common.begin(), common.end()));
  return r;
}

LemmaReport check_ceiling_floor(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kCeilingFloor);
  int checked = 0;
  for (const BiconnectedComponent* h : cyclic(in)) {
    for (const Cycle& c : h->min_cycles) {
      for (int shift = 0; shift < c.length(); ++shift) {
        Cycle rotated;
        for (int i = 0; i < c.length(); ++i) {
          rotated.vertices.push_back(c.at(shift + i));
        }
        ++checked;
        LemmaReport one = check_ceiling_floor(*in.graph, rotated);
        if (one.verdict == LemmaVerdict::kFail) return one;
      }
    }
  }
  if (checked == 0) {
    r.applicable = false;
    r.reasons.push_back("no min-cycles");
    return r;
  }
  r.verdict = LemmaVerdict::kPass;
  r.witness = {{"labelings_checked", std::to_string(checked)}};
  return r;
}

LemmaReport check_directed_min_cycles(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kDirectedMinCycles);
  equilibrium_premise(in, 2, r);
  for (const BiconnectedComponent* h : cyclic(in)) {
    for (const Cycle& c : h->min_cycles) {
      const bool directed = classify_cycle(*in.graph, c).is_directed;
      if (!r.structural) r.structural = true;
      if (!directed && *r.structural) {
        r.structural = false;
        r.witness = {{"undirected_cycle", str(c)}};
      }
    }
  }
  if (!r.structural) r.notes.push_back("no min-cycles");
  settle(r);
  return r;
}

LemmaReport check_girth_bound(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kGirthBound);
  equilibrium_premise(in, 2, r);
  const OwnedGraph& g = *in.graph;
  if (g.n() < 2) {
    r.applicable = false;
    r.reasons.push_back("n < 2");
    settle(r);
    return r;
  }
  r.threshold = girth_threshold(g.n(), *in.alpha);
  const Hops gamma = girth(g);
  std::ostringstream gs;
  gs << gamma;
  r.witness = {{"girth", gs.str()}, {"threshold", to_string(*r.threshold)}};
  if (gamma.is_finite()) {
    r.structural = Rational(gamma.value()) >= *r.threshold;
  } else {
    r.notes.push_back("acyclic: infinite girth");
  }
  if (!r.applicable && r.structural) {
    r.notes.push_back(std::string("outside the premise, bound ") +
                      (*r.structural ? "holds" : "does not hold"));
  }
  settle(r);
  return r;
}

LemmaReport check_outedge(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kOutEdge);
  equilibrium_premise(in, 2, r);
  const auto blocks = cyclic(in);
  if (blocks.empty()) {
    r.applicable = false;
    r.reasons.push_back("no cyclic biconnected component");
  }
  for (const BiconnectedComponent* h : blocks) {
    for (const Cycle& c : h->min_cycles) {
      if (!r.structural) r.structural = true;
      std::optional<EdgeKey> found;
      for (Vertex v : c.vertices) {
        if ((found = out_edge(*in.graph, *h, c, v))) {
          if (!r.witness.count("buyer")) {
            r.witness = {{"cycle", str(c)},
                         {"buyer", std::to_string(v)},
                         {"edge", str(*found)}};
          }
          break;
        }
      }
      if (!found && *r.structural) {
        r.structural = false;
        r.witness = {{"cycle", str(c)}};
        if (h->edges.size() == static_cast<std::size_t>(c.length())) {
          r.notes.push_back("component equals the cycle " + str(c) +
                            ": no edges outside it");
        }
      }
    }
  }
  settle(r);
  return r;
}

LemmaReport check_key_lemma(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kKeyLemma);
  equilibrium_premise(in, 2, r);
  const auto blocks = cyclic(in);
  if (blocks.empty()) {
    r.applicable = false;
    r.reasons.push_back("no cyclic biconnected component");
  }
  const OwnedGraph& g = *in.graph;
  for (const BiconnectedComponent* h : blocks) {
    const int k_max = h->k_max.value();
    for (const Cycle& c : h->longest_min_cycles()) {
      if (!r.structural) r.structural = true;
      bool found = false;
      for (int i = 0; i < c.length() && !found; ++i) {
        const auto f = out_edge(g, *h, c, c.at(i));
        if (!f) continue;
        for (int j = i + 1; j < c.length() && !found; ++j) {
          const auto e = out_edge(g, *h, c, c.at(j));
          const int d = c.cycle_distance(i, j);
          if (!e || 3 * d < k_max) continue;
          found = true;
          if (!r.witness.count("u")) {
            r.witness.insert({{"cycle", str(c)},
                              {"u", std::to_string(c.at(i))},
                              {"v", std::to_string(c.at(j))},
                              {"f", str(*f)},
                              {"g", str(*e)},
                              {"distance", std::to_string(d)},
                              {"k_max", std::to_string(k_max)}});
          }
        }
      }
      if (!found && *r.structural) {
        // Every longest min-cycle must carry a pair; keep any pair already
        // found next to the cycle that lacks one.
        r.structural = false;
        r.witness["uncovered_cycle"] = str(c);
        r.witness["k_max"] = std::to_string(k_max);
      }
    }
  }
  settle(r);
  return r;
}

LemmaReport check_tree_theorem(const LemmaInput& in) {
  LemmaReport r = make_report(LemmaId::kTree);
  equilibrium_premise(in, 3, r);
  r.structural = check_tree(*in.graph);
  r.witness = {{"edges", std::to_string(in.graph->edge_count())},
               {"n", std::to_string(in.graph->n())}};
  settle(r);
  return r;
}

namespace {

LemmaInput input_for(const OwnedGraph& g, std::optional<Alpha> alpha) {
  return LemmaInput::make(g, alpha);
}

}  // namespace

LemmaReport check_min_cycle_lemma(const OwnedGraph& g) {
  return check_min_cycle_lemma(input_for(g, std::nullopt));
}
LemmaReport check_chordless_and_opposite(const OwnedGraph& g) {
  return check_chordless_and_opposite(input_for(g, std::nullopt));
}
LemmaReport check_removal_bound(const OwnedGraph& g) {
  return check_removal_bound(input_for(g, std::nullopt));
}
LemmaReport check_satellite_disjoint(const OwnedGraph& g) {
  return check_satellite_disjoint(input_for(g, std::nullopt));
}
LemmaReport check_directed_min_cycles(const OwnedGraph& g, const Alpha& alpha) {
  return check_directed_min_cycles(input_for(g, alpha));
}
LemmaReport check_girth_bound(const OwnedGraph& g, const Alpha& alpha) {
  return check_girth_bound(input_for(g, alpha));
}
LemmaReport check_outedge(const OwnedGraph& g, const Alpha& alpha) {
  return check_outedge(input_for(g, alpha));
}
LemmaReport check_key_lemma(const OwnedGraph& g, const Alpha& alpha) {
  return check_key_lemma(input_for(g, alpha));
}

std::vector<LemmaReport> run_all(const LemmaInput& in) {
  using Checker = std::function<LemmaReport(const LemmaInput&)>;
  const std::vector<std::pair<LemmaId, Checker>> checkers = {
      {LemmaId::kMinCycle, [](const LemmaInput& x) { return check_min_cycle_lemma(x); }},
      {LemmaId::kChordlessOpposite, [](const LemmaInput& x) { return check_chordless_and_opposite(x); }},
      {LemmaId::kRemovalBound, [](const LemmaInput& x) { return check_removal_bound(x); }},
      {LemmaId::kDirectedMinCycles, [](const LemmaInput& x) { return check_directed_min_cycles(x); }},
      {LemmaId::kGirthBound, [](const LemmaInput& x) { return check_girth_bound(x); }},
      {LemmaId::kCeilingFloor, [](const LemmaInput& x) { return check_ceiling_floor(x); }},
      {LemmaId::kSatelliteDisjoint, [](const LemmaInput& x) { return check_satellite_disjoint(x); }},
      {LemmaId::kOutEdge, [](const LemmaInput& x) { return check_outedge(x); }},
      {LemmaId::kKeyLemma, [](const LemmaInput& x) { return check_key_lemma(x); }},
      {LemmaId::kTree, [](const LemmaInput& x) { return check_tree_theorem(x); }},
  };
  std::vector<LemmaReport> out;
  for (const auto& [id, check] : checkers) {
    try {
      out.push_back(check(in));
    } catch (const Error& e) {
      LemmaReport r = make_report(id);
      r.applicable = false;
      r.reasons.push_back(e.what());
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<LemmaReport> run_all(const OwnedGraph& g, const Alpha& alpha,
                                 const Budget& budget) {
  return run_all(LemmaInput::make(g, alpha, budget));
}

}  // namespace ncg
