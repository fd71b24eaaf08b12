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

#ifndef NCG_EQUILIBRIUM_H_
#define NCG_EQUILIBRIUM_H_

#include <optional>
#include <string>
#include <vector>

#include "ncg/budget.h"
#include "ncg/game.h"
#include "ncg/owned_graph.h"
#include "ncg/rational.h"

namespace ncg {

// A set of alpha values: an interval with a lower end >= 0 and an optional
// upper end, each open or closed, or the empty set. The default value is
// (0, inf), the whole domain of alpha.
class AlphaInterval {
 public:
  AlphaInterval() = default;

  static AlphaInterval empty_set();
  // Throws kInvalidArgument when lower < 0.
  static AlphaInterval between(const Rational& lower, bool lower_closed,
                               std::optional<Rational> upper,
                               bool upper_closed);
  static AlphaInterval point(const Rational& value) {
    return between(value, true, value, true);
  }

  // Intersects with {alpha > 0 : delta_build * alpha + delta_dist >= 0}.
  void add_constraint(const DeviationDelta& d);

  bool empty() const { return empty_; }
  const Rational& lower() const { return lower_; }
  bool lower_closed() const { return lower_closed_; }
  const std::optional<Rational>& upper() const { return upper_; }
  bool upper_closed() const { return upper_closed_; }

  bool contains(const Rational& alpha) const;
  AlphaInterval intersect(const AlphaInterval& other) const;
  bool intersects(const AlphaInterval& other) const {
    return !intersect(other).empty();
  }

  // "[1/1, 4/1]", "(0/1, inf)", "empty".
  std::string to_string() const;

  friend bool operator==(const AlphaInterval& a, const AlphaInterval& b);

 private:
  void normalize();

  bool empty_ = false;
  Rational lower_{0};
  bool lower_closed_ = false;
  std::optional<Rational> upper_;
  bool upper_closed_ = false;
};

// Up to three distinct points of a nonempty interval: its lower end (or a
// point just inside when open), an interior point, and its upper end (or a
// point just inside when open). For unbounded intervals the last point is
// `far` when that lies inside, otherwise lower + 2.
std::vector<Rational> interval_sample_points(const AlphaInterval& interval,
                                             const Rational& far);

// Targets v may buy: every u != v that did not itself buy {u, v}.
std::vector<Vertex> eligible_targets(const OwnedGraph& g, Vertex v);

// Every subset of eligible_targets(g, v), each ascending, including the
// empty set and v's current purchases. Throws kBudgetExceeded when
// n > budget.max_deviation_n.
std::vector<std::vector<Vertex>> enumerate_deviations(const OwnedGraph& g,
                                                      Vertex v,
                                                      const Budget& budget = {});

struct BestResponse {
  Cost current_cost;
  Cost best_cost;
  // Every minimizing purchase set, lexicographically ascending.
  std::vector<std::vector<Vertex>> witness_sets;
};

BestResponse best_response(const OwnedGraph& g, Vertex v, const Alpha& alpha,
                           const Budget& budget = {});

struct NashWitness {
  Vertex vertex = 0;
  std::vector<Vertex> deviation;
  DeviationDelta delta;
};

struct NashVerdict {
  bool is_equilibrium = true;
  // For a non-equilibrium: the lowest-index vertex with a strictly improving
  // deviation and its smallest such deviation (by size, then
  // lexicographically).
  std::optional<NashWitness> witness;
};

// Weak Nash test: an equilibrium iff no deviation strictly lowers a cost.
NashVerdict is_nash(const OwnedGraph& g, const Alpha& alpha,
                    const Budget& budget = {});

// Exact set of alpha for which g is a Nash equilibrium. Disconnected
// profiles give the empty set.
AlphaInterval nash_alpha_interval(const OwnedGraph& g,
                                  const Budget& budget = {});

}  // namespace ncg

#endif  // NCG_EQUILIBRIUM_H_
