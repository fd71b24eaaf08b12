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

#include "ncg/profiles.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "ncg/error.h"

namespace ncg {
namespace {

void check_n(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "profiles need n >= 1, got " + std::to_string(n));
  }
}

std::string word_string(int n, const std::vector<std::uint8_t>& word) {
  std::string out = std::to_string(n) + ":";
  for (std::uint8_t d : word) out.push_back(static_cast<char>('0' + d));
  return out;
}

}  // namespace

int pair_count(int n) { return n * (n - 1) / 2; }

int pair_index(int n, Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::uint64_t labeled_profile_count(int n) {
  check_n(n);
  if (pair_count(n) > 40) {
    throw Error(ErrorCode::kBudgetExceeded,
                "3^(n(n-1)/2) overflows for n = " + std::to_string(n));
  }
  std::uint64_t out = 1;
  for (int p = 0; p < pair_count(n); ++p) out *= 3;
  return out;
}

std::vector<std::uint8_t> profile_word(const OwnedGraph& g) {
  std::vector<std::uint8_t> word(static_cast<std::size_t>(pair_count(g.n())), 0);
  for (const OwnedEdge& e : g.edges()) {
    word[pair_index(g.n(), e.u, e.v)] = e.owner == e.u ? 1 : 2;
  }
  return word;
}

OwnedGraph profile_from_word(int n, const std::vector<std::uint8_t>& word) {
  check_n(n);
  if (word.size() != static_cast<std::size_t>(pair_count(n))) {
    throw Error(ErrorCode::kInvalidArgument, "profile word has wrong length");
  }
  std::vector<OwnedEdge> edges;
  int p = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++p) {
      const std::uint8_t d = word[p];
      if (d == 1) edges.push_back({i, j, i});
      if (d == 2) edges.push_back({i, j, j});
      if (d > 2) throw Error(ErrorCode::kInvalidArgument, "bad profile letter");
    }
  }
  return OwnedGraph::build(n, edges);
}

ProfileCode encode_profile(const OwnedGraph& g) {
  labeled_profile_count(g.n());  // range check
  ProfileCode code = 0;
  for (std::uint8_t d : profile_word(g)) code = code * 3 + d;
  return code;
}

OwnedGraph decode_profile(int n, ProfileCode code) {
  if (code >= labeled_profile_count(n)) {
    throw Error(ErrorCode::kInvalidArgument, "profile code out of range");
  }
  std::vector<std::uint8_t> word(static_cast<std::size_t>(pair_count(n)));
  for (std::size_t p = word.size(); p-- > 0;) {
    word[p] = static_cast<std::uint8_t>(code % 3);
    code /= 3;
  }
  return profile_from_word(n, word);
}

std::string labeled_id(const OwnedGraph& g) {
  return word_string(g.n(), profile_word(g));
}

OwnedGraph permute(const OwnedGraph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != static_cast<std::size_t>(g.n())) {
    throw Error(ErrorCode::kInvalidArgument, "permutation has wrong size");
  }
  std::vector<OwnedEdge> edges;
  for (const OwnedEdge& e : g.edges()) {
    edges.push_back({perm[e.u], perm[e.v], perm[e.owner]});
  }
  return OwnedGraph::build(g.n(), edges);
}

Canonicalizer::Canonicalizer(int n, const Budget& budget)
    : n_(n), pairs_(pair_count(n)) {
  check_n(n);
  if (n > budget.max_canonical_id_n) {
    throw Error(ErrorCode::kBudgetExceeded,
                "canonical ids need n <= " +
                    std::to_string(budget.max_canonical_id_n) + ", got " +
                    std::to_string(n));
  }
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Vertex> inverse(perm.size());
  do {
    for (Vertex v = 0; v < n; ++v) inverse[perm[v]] = v;
    std::vector<std::uint16_t> src(static_cast<std::size_t>(pairs_));
    std::vector<std::uint8_t> flip(static_cast<std::size_t>(pairs_));
    int q = 0;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b, ++q) {
        const Vertex x = inverse[a];
        const Vertex y = inverse[b];
        src[q] = static_cast<std::uint16_t>(pair_index(n, x, y));
        flip[q] = x > y;
      }
    }
    source_.push_back(std::move(src));
    flip_.push_back(std::move(flip));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

namespace {

inline std::uint8_t relabel(std::uint8_t d, std::uint8_t flip) {
  return flip && d ? static_cast<std::uint8_t>(3 - d) : d;
}

}  // namespace

std::vector<std::uint8_t> Canonicalizer::canonical_word(
    const std::vector<std::uint8_t>& word) const {
  std::vector<std::uint8_t> best = word;
  std::vector<std::uint8_t> cur(word.size());
  for (std::size_t k = 0; k < source_.size(); ++k) {
    const auto& src = source_[k];
    const auto& flip = flip_[k];
    // Build lazily and stop as soon as the candidate exceeds `best`.
    bool smaller = false;
    bool bigger = false;
    for (int q = 0; q < pairs_ && !bigger; ++q) {
      cur[q] = relabel(word[src[q]], flip[q]);
      if (!smaller) {
        if (cur[q] < best[q]) smaller = true;
        else if (cur[q] > best[q]) bigger = true;
      }
    }
    if (smaller) best = cur;
  }
  return best;
}

bool Canonicalizer::is_canonical(const std::vector<std::uint8_t>& word,
                                 std::uint64_t* automorphisms) const {
  std::uint64_t fixed = 0;
  for (std::size_t k = 0; k < source_.size(); ++k) {
    const auto& src = source_[k];
    const auto& flip = flip_[k];
    int cmp = 0;
    for (int q = 0; q < pairs_ && cmp == 0; ++q) {
      const std::uint8_t d = relabel(word[src[q]], flip[q]);
      cmp = d < word[q] ? -1 : (d > word[q] ? 1 : 0);
    }
    if (cmp < 0) return false;
    if (cmp == 0) ++fixed;
  }
  if (automorphisms) *automorphisms = fixed;
  return true;
}

std::string canonical_id(const OwnedGraph& g, const Budget& budget) {
  const Canonicalizer canon(g.n(), budget);
  return word_string(g.n(), canon.canonical_word(profile_word(g)));
}

OwnedGraph canonical_form(const OwnedGraph& g, const Budget& budget) {
  const Canonicalizer canon(g.n(), budget);
  return profile_from_word(g.n(), canon.canonical_word(profile_word(g)));
}

void for_each_profile(int n, EnumerationMode mode,
                      const std::function<void(const OwnedGraph&)>& f,
                      const Budget& budget) {
  check_n(n);
  const int cap = mode == EnumerationMode::kLabeled ? budget.max_labeled_n
                                                    : budget.max_canonical_n;
  if (n > cap) {
    throw Error(ErrorCode::kBudgetExceeded,
                "profile enumeration needs n <= " + std::to_string(cap) +
                    ", got " + std::to_string(n));
  }
  std::optional<Canonicalizer> canon;
  if (mode == EnumerationMode::kCanonical) canon.emplace(n, budget);
  std::vector<std::uint8_t> word(static_cast<std::size_t>(pair_count(n)), 0);
  while (true) {
    if (!canon || canon->is_canonical(word)) f(profile_from_word(n, word));
    // Odometer increment, last pair least significant.
    std::size_t p = word.size();
    while (p > 0 && word[p - 1] == 2) word[--p] = 0;
    if (p == 0) break;
    ++word[p - 1];
  }
}

std::vector<OwnedGraph> enumerate_profiles(int n, EnumerationMode mode,
                                           const Budget& budget) {
  std::vector<OwnedGraph> out;
  for_each_profile(n, mode, [&](const OwnedGraph& g) { out.push_back(g); },
                   budget);
  return out;
}

}  // namespace ncg
