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

#include "ncg/budget.h"

#include <charconv>
#include <cstdlib>

#include "ncg/error.h"

namespace ncg {
namespace {

std::size_t parse_count(std::string_view key, std::string_view value) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
    throw Error(ErrorCode::kParseError, "budget value for " + std::string(key) +
                                            " is not a count: \"" +
                                            std::string(value) + "\"");
  }
  return out;
}

}  // namespace

Budget apply_budget_overrides(Budget base, std::string_view spec) {
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{}
                                           : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParseError,
                  "budget entry without '=': \"" + std::string(item) + "\"");
    }
    const std::string_view key = item.substr(0, eq);
    const std::size_t value = parse_count(key, item.substr(eq + 1));
    if (key == "deviation_n") {
      base.max_deviation_n = static_cast<int>(value);
    } else if (key == "labeled_n") {
      base.max_labeled_n = static_cast<int>(value);
    } else if (key == "canonical_n") {
      base.max_canonical_n = static_cast<int>(value);
    } else if (key == "canonical_id_n") {
      base.max_canonical_id_n = static_cast<int>(value);
    } else if (key == "cycle_candidates") {
      base.cycle_candidates = value;
    } else {
      throw Error(ErrorCode::kParseError,
                  "unknown budget key \"" + std::string(key) + "\"");
    }
  }
  return base;
}

Budget budget_from_environment(Budget base) {
  const char* env = std::getenv("NCG_BUDGET");
  if (env == nullptr) return base;
  return apply_budget_overrides(base, env);
}

}  // namespace ncg
