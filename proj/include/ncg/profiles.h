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

#ifndef NCG_PROFILES_H_
#define NCG_PROFILES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ncg/budget.h"
#include "ncg/owned_graph.h"

namespace ncg {

// A profile on n vertices is a word over {0, 1, 2} with one letter per
// unordered pair {i < j}, pairs in lexicographic order: 0 = absent,
// 1 = bought by i, 2 = bought by j. As a base-3 number (first pair most
// significant) the word is the profile's code.
using ProfileCode = std::uint64_t;

enum class EnumerationMode { kLabeled, kCanonical };

int pair_count(int n);
// Position of {i, j} in the pair order.
int pair_index(int n, Vertex i, Vertex j);

// 3^(n(n-1)/2); throws Error(kBudgetExceeded) when it overflows 64 bits.
std::uint64_t labeled_profile_count(int n);

std::vector<std::uint8_t> profile_word(const OwnedGraph& g);
OwnedGraph profile_from_word(int n, const std::vector<std::uint8_t>& word);

// Codes need n <= 9; throws Error(kBudgetExceeded) otherwise.
ProfileCode encode_profile(const OwnedGraph& g);
OwnedGraph decode_profile(int n, ProfileCode code);

// "n:word", e.g. "3:120". Identifies a labeled profile.
std::string labeled_id(const OwnedGraph& g);

// Relabels every vertex v as perm[v].
OwnedGraph permute(const OwnedGraph& g, const std::vector<Vertex>& perm);

// Finds the lexicographically smallest word over all relabelings.
class Canonicalizer {
 public:
  // Throws Error(kBudgetExceeded) when n > budget.max_canonical_id_n.
  explicit Canonicalizer(int n, const Budget& budget = {});

  int n() const { return n_; }

  std::vector<std::uint8_t> canonical_word(
      const std::vector<std::uint8_t>& word) const;
  // True iff no relabeling yields a smaller word. When true and
  // `automorphisms` is given, it receives the number of relabelings that
  // leave the word unchanged.
  bool is_canonical(const std::vector<std::uint8_t>& word,
                    std::uint64_t* automorphisms = nullptr) const;

 private:
  int n_;
  int pairs_;
  // Per permutation, per target pair: source pair and whether the buyer
  // letter flips.
  std::vector<std::vector<std::uint16_t>> source_;
  std::vector<std::vector<std::uint8_t>> flip_;
};

// "n:word" of the canonical word: equal iff an ownership-preserving
// isomorphism exists. Throws Error(kBudgetExceeded) for n above the budget.
std::string canonical_id(const OwnedGraph& g, const Budget& budget = {});

// The canonical representative (relabelled so its word is minimal).
OwnedGraph canonical_form(const OwnedGraph& g, const Budget& budget = {});

// Calls f for every labeled profile (LABELED) or every orbit representative
// (CANONICAL; the one with minimal word), in ascending code order. Throws
// Error(kBudgetExceeded) when n exceeds max_labeled_n / max_canonical_n.
void for_each_profile(int n, EnumerationMode mode,
                      const std::function<void(const OwnedGraph&)>& f,
                      const Budget& budget = {});
std::vector<OwnedGraph> enumerate_profiles(int n, EnumerationMode mode,
                                           const Budget& budget = {});

}  // namespace ncg

#endif  // NCG_PROFILES_H_
