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

#include "ncg/census.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "deviation_scorer.h"
#include "ncg/components.h"
#include "ncg/cycles.h"
#include "ncg/error.h"

namespace ncg {
namespace {

using internal::bit;
using internal::DeviationScorer;
using internal::Mask;

using Word = std::vector<std::uint8_t>;

// Leading pairs fixed per partition; 3^6 = 729 partitions at most.
constexpr int kPartitionDigits = 6;

struct PartitionResult {
  bool done = false;
  std::uint64_t examined = 0;
  // Canonical code -> number of labeled profiles with a nonempty interval.
  std::map<ProfileCode, std::uint64_t> classes;
};

ProfileCode word_code(const Word& w) {
  ProfileCode c = 0;
  for (std::uint8_t d : w) c = c * 3 + d;
  return c;
}

Word code_word(int pairs, ProfileCode c) {
  Word w(static_cast<std::size_t>(pairs));
  for (std::size_t p = w.size(); p-- > 0;) {
    w[p] = static_cast<std::uint8_t>(c % 3);
    c /= 3;
  }
  return w;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

class CensusRun {
 public:
  CensusRun(int n, const CensusOptions& options)
      : n_(n),
        pairs_(pair_count(n)),
        options_(options),
        canon_(n, options.budget) {
    const int fixed = std::min(pairs_, kPartitionDigits);
    prefix_digits_ = fixed;
    partitions_ = 1;
    for (int i = 0; i < fixed; ++i) partitions_ *= 3;
    results_.resize(partitions_);
  }

  void load_checkpoint() {
    if (!options_.checkpoint_path) return;
    std::ifstream done(*options_.checkpoint_path);
    std::set<std::size_t> completed;
    for (std::size_t idx; done >> idx;) {
      if (idx < partitions_) completed.insert(idx);
    }
    std::ifstream records(*options_.checkpoint_path + ".records");
    std::string line;
    while (std::getline(records, line)) {
      std::istringstream in(line);
      std::size_t idx = 0;
      ProfileCode code = 0;
      std::uint64_t count = 0;
      if (!(in >> idx >> code >> count)) continue;
      // A partition rerun after an interruption appends its lines again;
      // reruns are deterministic, so the last line for a code wins.
      if (completed.count(idx)) results_[idx].classes[code] = count;
    }
    for (std::size_t idx : completed) {
      results_[idx].done = true;
      results_[idx].examined = partition_size(idx);
    }
  }

  void run(int workers) {
    std::atomic<std::size_t> next{0};
    std::mutex io;
    std::exception_ptr failure;
    auto work = [&] {
      try {
        const Canonicalizer canon(n_, options_.budget);
        for (std::size_t idx; (idx = next.fetch_add(1)) < partitions_;) {
          if (results_[idx].done) continue;
          process(idx, canon, results_[idx]);
          if (options_.checkpoint_path) {
            const std::lock_guard<std::mutex> lock(io);
            save_partition(idx);
          }
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(io);
        if (!failure) failure = std::current_exception();
      }
    };
    std::vector<std::thread> threads;
    for (int i = 1; i < workers; ++i) threads.emplace_back(work);
    work();
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  CensusResult finish() const;

 private:
  std::uint64_t partition_size(std::size_t) const {
    std::uint64_t s = 1;
    for (int i = prefix_digits_; i < pairs_; ++i) s *= 3;
    return s;
  }

  void process(std::size_t idx, const Canonicalizer& canon,
               PartitionResult& out) const;
  void save_partition(std::size_t idx) const;

  int n_;
  int pairs_;
  CensusOptions options_;
  Canonicalizer canon_;
  int prefix_digits_ = 0;
  std::size_t partitions_ = 1;
  std::vector<PartitionResult> results_;
};

void CensusRun::process(std::size_t idx, const Canonicalizer& canon,
                        PartitionResult& out) const {
  Word word(static_cast<std::size_t>(pairs_), 0);
  {
    std::size_t rest = idx;
    for (int p = prefix_digits_; p-- > 0;) {
      word[p] = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
    }
  }
  // Pair endpoints in word order.
  std::vector<std::pair<Vertex, Vertex>> ends;
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = i + 1; j < n_; ++j) ends.emplace_back(i, j);
  }
  const bool canonical_mode = options_.mode == EnumerationMode::kCanonical;
  const std::uint64_t group = factorial(n_);
  std::vector<Mask> owned(static_cast<std::size_t>(n_));
  while (true) {
    ++out.examined;
    std::uint64_t weight = 1;
    bool take = true;
    if (canonical_mode) {
      std::uint64_t automorphisms = 0;
      take = canon.is_canonical(word, &automorphisms);
      if (take) weight = group / automorphisms;
    }
    int edges = 0;
    if (take) {
      std::fill(owned.begin(), owned.end(), Mask{0});
      for (int p = 0; p < pairs_; ++p) {
        const auto [i, j] = ends[p];
        if (word[p] == 1) owned[i] |= bit(j);
        if (word[p] == 2) owned[j] |= bit(i);
        edges += word[p] != 0;
      }
    }
    // Fewer than n - 1 edges cannot connect the graph.
    if (take && edges >= n_ - 1) {
      const DeviationScorer scorer(n_, owned);
      if (!internal::scorer_interval(scorer).empty()) {
        const Word best = canonical_mode ? word : canon.canonical_word(word);
        out.classes[word_code(best)] += weight;
      }
    }
    // Odometer over the free (non-prefix) pairs.
    int p = pairs_;
    while (p > prefix_digits_ && word[p - 1] == 2) word[--p] = 0;
    if (p == prefix_digits_) break;
    ++word[p - 1];
  }
  out.done = true;
}

void CensusRun::save_partition(std::size_t idx) const {
  const std::string& path = *options_.checkpoint_path;
  {
    std::ofstream records(path + ".records", std::ios::app);
    for (const auto& [code, count] : results_[idx].classes) {
      records << idx << ' ' << code << ' ' << count << '\n';
    }
  }
  std::ofstream done(path, std::ios::app);
  done << idx << '\n';
}

CensusResult CensusRun::finish() const {
  CensusResult result;
  CensusSummary& s = result.summary;
  s.n = n_;
  std::map<ProfileCode, std::uint64_t> classes;
  for (const PartitionResult& r : results_) {
    s.profiles_examined += r.examined;
    for (const auto& [code, count] : r.classes) classes[code] += count;
  }
  s.classes = classes.size();
  const AlphaInterval above_theorem =
      AlphaInterval::between(Rational(3 * (n_ - 1)), false, std::nullopt, false);
  const AlphaInterval at_least_n =
      AlphaInterval::between(Rational(n_), true, std::nullopt, false);
  for (const auto& [code, count] : classes) {
    s.equilibrium_profiles += count;
    CensusRecord rec;
    rec.n = n_;
    rec.representative = profile_from_word(n_, code_word(pairs_, code));
    rec.canonical_id = labeled_id(rec.representative);
    rec.multiplicity = count;
    rec.interval = nash_alpha_interval(rec.representative, options_.budget);
    if (rec.interval.empty()) {
      throw std::logic_error("census class " + rec.canonical_id +
                             " lost its interval");
    }
    rec.is_tree = check_tree(rec.representative);
    rec.edge_count = rec.representative.edge_count();
    rec.girth = girth(rec.representative);
    for (const auto& block : cyclic_components(
             rec.representative, {options_.budget.cycle_candidates})) {
      ++rec.cyclic_components;
      rec.k_max = std::max(rec.k_max.value_or(0), *block.k_max);
    }
    if (!rec.is_tree && rec.interval.intersects(above_theorem)) {
      s.theorem_violations.push_back(rec.canonical_id);
    }
    if (!rec.is_tree && rec.interval.intersects(at_least_n)) {
      s.conjecture_violations.push_back(rec.canonical_id);
    }
    rec.sample_points = census_sample_points(rec.interval, n_);
    if (options_.run_lemmas) {
      LemmaSummary total;
      for (const Rational& a : rec.sample_points) {
        const auto reports =
            run_all(rec.representative, Alpha(a), options_.budget);
        for (const LemmaReport& r : reports) {
          if (r.verdict == LemmaVerdict::kFail) {
            rec.lemma_failures.push_back(std::string(to_string(r.id)) + "@" +
                                         to_string(a));
          }
        }
        const LemmaSummary one = summarize(reports);
        total.pass += one.pass;
        total.fail += one.fail;
        total.vacuous += one.vacuous;
      }
      rec.lemmas = total;
      s.lemma_failures += rec.lemma_failures.size();
    }
    if (options_.non_tree_only && rec.is_tree) continue;
    if (options_.alpha_filter &&
        !rec.interval.intersects(*options_.alpha_filter)) {
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  return result;
}

}  // namespace

std::vector<Rational> census_sample_points(const AlphaInterval& interval,
                                           int n) {
  const Rational far =
      2 * std::max(interval.lower(), Rational(1)) + Rational(3 * n);
  return interval_sample_points(interval, far);
}

CensusResult census(int n, const CensusOptions& options) {
  if (n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "census needs n >= 1");
  }
  if (options.workers < 1) {
    throw Error(ErrorCode::kInvalidArgument, "census needs at least one worker");
  }
  const bool labeled = options.mode == EnumerationMode::kLabeled;
  const int cap =
      labeled ? options.budget.max_labeled_n : options.budget.max_canonical_n;
  if (n > cap) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(labeled ? "labeled" : "canonical") +
                    " census needs n <= " + std::to_string(cap) + ", got " +
                    std::to_string(n));
  }
  if (n > options.budget.max_deviation_n || n > 9) {
    throw Error(ErrorCode::kBudgetExceeded,
                "census n = " + std::to_string(n) + " exceeds the deviation "
                "budget");
  }
  CensusRun run(n, options);
  run.load_checkpoint();
  run.run(options.workers);
  return run.finish();
}

std::vector<CensusRecord> hunt_nontree(int n, const AlphaInterval& query,
                                       CensusOptions options) {
  options.non_tree_only = true;
  options.alpha_filter = options.alpha_filter
                             ? options.alpha_filter->intersect(query)
                             : query;
  return census(n, options).records;
}

}  // namespace ncg
