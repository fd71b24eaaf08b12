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

#ifndef NCG_RATIONAL_H_
#define NCG_RATIONAL_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/rational.hpp>

#include "ncg/extended.h"

namespace ncg {

using Rational = boost::rational<std::int64_t>;

// boost::rational's mixed rational/integer equality recurses without end
// under C++20 rewritten comparisons. Compare against Rational(k) instead.
template <typename I>
  requires std::is_integral_v<I>
bool operator==(const Rational&, I) = delete;
template <typename I>
  requires std::is_integral_v<I>
bool operator==(I, const Rational&) = delete;
template <typename I>
  requires std::is_integral_v<I>
bool operator!=(const Rational&, I) = delete;
template <typename I>
  requires std::is_integral_v<I>
bool operator!=(I, const Rational&) = delete;

// Exact value or +-infinity; used for costs.
using Cost = Extended<Rational>;

// "p/q" with q > 0 and gcd(p, q) = 1; integers are printed as "p/1".
std::string to_string(const Rational& r);

// Accepts "p/q" or "p" (optional leading '-'); throws Error(kParseError).
Rational parse_rational(std::string_view text);

// The per-edge price. Always a positive rational in lowest terms.
class Alpha {
 public:
  // Throws Error(kInvalidArgument) unless value > 0.
  explicit Alpha(const Rational& value);
  explicit Alpha(std::int64_t value) : Alpha(Rational(value)) {}

  static Alpha parse(std::string_view text);

  const Rational& value() const { return value_; }

  friend bool operator==(const Alpha& a, const Alpha& b) {
    return a.value_ == b.value_;
  }

 private:
  Rational value_;
};

std::string to_string(const Alpha& alpha);
std::string to_string(const Cost& cost);

}  // namespace ncg

#endif  // NCG_RATIONAL_H_
