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

#include "ncg/equilibrium.h"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "deviation_scorer.h"
#include "ncg/distances.h"
#include "ncg/error.h"

namespace ncg {

using internal::DeviationScorer;
using internal::Mask;

AlphaInterval AlphaInterval::empty_set() {
  AlphaInterval out;
  out.empty_ = true;
  return out;
}

AlphaInterval AlphaInterval::between(const Rational& lower, bool lower_closed,
                                     std::optional<Rational> upper,
                                     bool upper_closed) {
  if (lower < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "interval lower end must be >= 0, got " + ncg::to_string(lower));
  }
  AlphaInterval out;
  out.lower_ = lower;
  out.lower_closed_ = lower_closed;
  out.upper_ = std::move(upper);
  out.upper_closed_ = out.upper_.has_value() && upper_closed;
  out.normalize();
  return out;
}

void AlphaInterval::normalize() {
  if (lower_ == Rational(0)) lower_closed_ = false;  // alpha > 0 always
  if (!empty_ && upper_) {
    if (*upper_ < lower_ ||
        (*upper_ == lower_ && !(lower_closed_ && upper_closed_))) {
      empty_ = true;
    }
  }
  if (empty_) {
    lower_ = 0;
    lower_closed_ = false;
    upper_.reset();
    upper_closed_ = false;
  }
}

void AlphaInterval::add_constraint(const DeviationDelta& d) {
  if (empty_ || d.delta_dist.is_infinite()) return;
  if (d.delta_dist.is_neg_infinite()) {
    *this = empty_set();
    return;
  }
  const Rational dist(d.delta_dist.value());
  if (d.delta_build == 0) {
    if (dist < 0) *this = empty_set();
    return;
  }
  // Boundary where the deviation is cost-neutral.
  const Rational root = -dist / Rational(d.delta_build);
  if (d.delta_build > 0) {
    *this = intersect(between(std::max(root, Rational(0)), root > 0,
                              std::nullopt, false));
  } else if (root <= 0) {
    *this = empty_set();
  } else {
    *this = intersect(between(0, false, root, true));
  }
}

bool AlphaInterval::contains(const Rational& alpha) const {
  if (empty_) return false;
  const bool above = alpha > lower_ || (alpha == lower_ && lower_closed_);
  const bool below = !upper_ || alpha < *upper_ ||
                     (alpha == *upper_ && upper_closed_);
  return above && below;
}

AlphaInterval AlphaInterval::intersect(const AlphaInterval& other) const {
  if (empty_ || other.empty_) return empty_set();
  AlphaInterval out;
  if (lower_ == other.lower_) {
    out.lower_ = lower_;
    out.lower_closed_ = lower_closed_ && other.lower_closed_;
  } else {
    const AlphaInterval& hi = lower_ > other.lower_ ? *this : other;
    out.lower_ = hi.lower_;
    out.lower_closed_ = hi.lower_closed_;
  }
  if (!upper_ || !other.upper_) {
    const AlphaInterval& src = upper_ ? *this : other;
    out.upper_ = src.upper_;
    out.upper_closed_ = src.upper_closed_;
  } else if (*upper_ == *other.upper_) {
    out.upper_ = upper_;
    out.upper_closed_ = upper_closed_ && other.upper_closed_;
  } else {
    const AlphaInterval& lo = *upper_ < *other.upper_ ? *this : other;
    out.upper_ = lo.upper_;
    out.upper_closed_ = lo.upper_closed_;
  }
  out.normalize();
  return out;
}

std::string AlphaInterval::to_string() const {
  if (empty_) return "empty";
  std::string out = lower_closed_ ? "[" : "(";
  out += ncg::to_string(lower_);
  out += ", ";
  if (upper_) {
    out += ncg::to_string(*upper_);
    out += upper_closed_ ? "]" : ")";
  } else {
    out += "inf)";
  }
  return out;
}

bool operator==(const AlphaInterval& a, const AlphaInterval& b) {
  return a.empty_ == b.empty_ && a.lower_ == b.lower_ &&
         a.lower_closed_ == b.lower_closed_ && a.upper_ == b.upper_ &&
         a.upper_closed_ == b.upper_closed_;
}

std::vector<Rational> interval_sample_points(const AlphaInterval& interval,
                                             const Rational& far) {
  std::vector<Rational> out;
  if (interval.empty()) return out;
  const Rational lo = interval.lower();
  if (interval.upper()) {
    const Rational hi = *interval.upper();
    const Rational mid = (lo + hi) / 2;
    out.push_back(interval.lower_closed() ? lo : (lo + mid) / 2);
    out.push_back(mid);
    out.push_back(interval.upper_closed() ? hi : (mid + hi) / 2);
  } else {
    const Rational first = interval.lower_closed() ? lo : lo + Rational(1, 2);
    out.push_back(first);
    out.push_back(lo + 1);
    out.push_back(far > first ? far : lo + 2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void check_deviation_budget(const OwnedGraph& g, const Budget& budget) {
  if (g.n() > budget.max_deviation_n) {
    throw Error(ErrorCode::kBudgetExceeded,
                "deviation enumeration needs n <= " +
                    std::to_string(budget.max_deviation_n) + ", got n = " +
                    std::to_string(g.n()));
  }
}

// Orders purchase sets by size, then lexicographically.
bool smaller_deviation(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  return DeviationScorer::to_vertices(a) < DeviationScorer::to_vertices(b);
}

Cost cost_of(const DeviationScorer& scorer, Vertex v, Mask targets,
             const Alpha& alpha) {
  const std::int64_t d = scorer.dist_sum(v, targets);
  if (d < 0) return Cost::infinite();
  return Cost(alpha.value() * std::popcount(targets) + d);
}

Cost current_cost(const DeviationScorer& scorer, Vertex v,
                  const Alpha& alpha) {
  const std::int64_t d = scorer.current_dist_sum(v);
  if (d < 0) return Cost::infinite();
  return Cost(alpha.value() * std::popcount(scorer.owned_mask(v)) + d);
}

// Calls f(mask) for every submask of `set`, including 0 and `set`.
template <typename F>
void for_each_submask(Mask set, F&& f) {
  for (Mask s = set;; s = (s - 1) & set) {
    f(s);
    if (s == 0) break;
  }
}

}  // namespace

std::vector<Vertex> eligible_targets(const OwnedGraph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (u != v && !g.owns(u, v)) out.push_back(u);
  }
  return out;
}

std::vector<std::vector<Vertex>> enumerate_deviations(const OwnedGraph& g,
                                                      Vertex v,
                                                      const Budget& budget) {
  g.check_vertex(v);
  check_deviation_budget(g, budget);
  const DeviationScorer scorer(g);
  std::vector<Mask> masks;
  for_each_submask(scorer.eligible_mask(v), [&](Mask s) { masks.push_back(s); });
  std::sort(masks.begin(), masks.end(), smaller_deviation);
  std::vector<std::vector<Vertex>> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(DeviationScorer::to_vertices(m));
  return out;
}

BestResponse best_response(const OwnedGraph& g, Vertex v, const Alpha& alpha,
                           const Budget& budget) {
  g.check_vertex(v);
  check_deviation_budget(g, budget);
  const DeviationScorer scorer(g);
  BestResponse out;
  out.current_cost = current_cost(scorer, v, alpha);
  out.best_cost = Cost::infinite();
  std::vector<Mask> best;
  for_each_submask(scorer.eligible_mask(v), [&](Mask s) {
    const Cost c = cost_of(scorer, v, s, alpha);
    if (c < out.best_cost) {
      out.best_cost = c;
      best.clear();
    }
    if (c == out.best_cost) best.push_back(s);
  });
  for (Mask m : best) out.witness_sets.push_back(DeviationScorer::to_vertices(m));
  std::sort(out.witness_sets.begin(), out.witness_sets.end());
  return out;
}

NashVerdict is_nash(const OwnedGraph& g, const Alpha& alpha,
                    const Budget& budget) {
  check_deviation_budget(g, budget);
  const DeviationScorer scorer(g);
  NashVerdict verdict;
  for (Vertex v = 0; v < g.n(); ++v) {
    const Cost now = current_cost(scorer, v, alpha);
    std::optional<Mask> found;
    for_each_submask(scorer.eligible_mask(v), [&](Mask s) {
      if (cost_of(scorer, v, s, alpha) < now &&
          (!found || smaller_deviation(s, *found))) {
        found = s;
      }
    });
    if (found) {
      verdict.is_equilibrium = false;
      verdict.witness = NashWitness{v, DeviationScorer::to_vertices(*found),
                                    scorer.delta(v, *found)};
      return verdict;
    }
  }
  return verdict;
}

namespace internal {

AlphaInterval scorer_interval(const DeviationScorer& scorer) {
  const int n = scorer.n();
  for (Vertex v = 0; v < n; ++v) {
    if (scorer.current_dist_sum(v) < 0) return AlphaInterval::empty_set();
  }
  AlphaInterval out;
  // Cheap pass: drop one purchase, add one, or swap one for another.
  for (Vertex v = 0; v < n; ++v) {
    const Mask owned = scorer.owned_mask(v);
    const Mask eligible = scorer.eligible_mask(v);
    for (Mask a = eligible; a; a &= a - 1) {
      const Mask x = a & -a;
      out.add_constraint(scorer.delta(v, owned ^ x));
      if (!(owned & x)) continue;
      for (Mask b = eligible & ~owned; b; b &= b - 1) {
        out.add_constraint(scorer.delta(v, (owned & ~x) | (b & -b)));
      }
    }
    if (out.empty()) return out;
  }
  for (Vertex v = 0; v < n; ++v) {
    const Mask eligible = scorer.eligible_mask(v);
    for (Mask s = eligible;; s = (s - 1) & eligible) {
      out.add_constraint(scorer.delta(v, s));
      if (out.empty()) return out;
      if (s == 0) break;
    }
  }
  return out;
}

}  // namespace internal

AlphaInterval nash_alpha_interval(const OwnedGraph& g, const Budget& budget) {
  check_deviation_budget(g, budget);
  if (!is_connected(g)) return AlphaInterval::empty_set();
  return internal::scorer_interval(DeviationScorer(g));
}

}  // namespace ncg
