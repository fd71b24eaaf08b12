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

#include "ncg/rational.h"

#include <charconv>
#include <system_error>

#include "ncg/error.h"

namespace ncg {
namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::kParseError,
                "not a rational \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicatePair: return "DuplicatePair";
    case ErrorCode::kOwnerNotEndpoint: return "OwnerNotEndpoint";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kDegenerateQuery: return "DegenerateQuery";
    case ErrorCode::kNotTreeLikeOrientation: return "NotTreeLikeOrientation";
    case ErrorCode::kNoSuchEdge: return "NoSuchEdge";
    case ErrorCode::kComponentNotCyclic: return "ComponentNotCyclic";
    case ErrorCode::kCandidateBudgetExceeded: return "CandidateBudgetExceeded";
    case ErrorCode::kNotACycle: return "NotACycle";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kBuysExistingEdge: return "BuysExistingEdge";
    case ErrorCode::kSelfTarget: return "SelfTarget";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kNotMinCycle: return "NotMinCycle";
    case ErrorCode::kPremiseFailure: return "PremiseFailure";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text));
  }
  const std::int64_t num = parse_integer(text.substr(0, slash), text);
  const std::int64_t den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::kParseError,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

Alpha::Alpha(const Rational& value) : value_(value) {
  if (value_ <= 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "alpha must be positive, got " + to_string(value_));
  }
}

Alpha Alpha::parse(std::string_view text) { return Alpha(parse_rational(text)); }

std::string to_string(const Alpha& alpha) { return to_string(alpha.value()); }

std::string to_string(const Cost& cost) {
  if (cost.is_infinite()) return "inf";
  if (cost.is_neg_infinite()) return "-inf";
  return to_string(cost.value());
}

}  // namespace ncg
