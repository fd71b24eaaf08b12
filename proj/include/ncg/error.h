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

#ifndef NCG_ERROR_H_
#define NCG_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncg {

enum class ErrorCode {
  kSelfLoop,
  kDuplicatePair,
  kOwnerNotEndpoint,
  kIndexOutOfRange,
  kUnreachable,
  kDegenerateQuery,
  kNotTreeLikeOrientation,
  kNoSuchEdge,
  kComponentNotCyclic,
  kCandidateBudgetExceeded,
  kNotACycle,
  kDisconnected,
  kBuysExistingEdge,
  kSelfTarget,
  kBudgetExceeded,
  kPreconditionFailed,
  kNotMinCycle,
  kPremiseFailure,
  kParseError,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

// All recoverable failures of the library are reported through this type.
// Broken internal invariants (a lemma that provably holds failing to hold)
// are std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}
  // An error of kind `code` caused by an underlying error of kind `cause`,
  // e.g. a parse error caused by a self loop in the input.
  Error(ErrorCode code, ErrorCode cause, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + "(" +
                           std::string(to_string(cause)) + "): " + what),
        code_(code),
        cause_(cause) {}

  ErrorCode code() const { return code_; }
  std::optional<ErrorCode> cause() const { return cause_; }

 private:
  ErrorCode code_;
  std::optional<ErrorCode> cause_;
};

}  // namespace ncg

#endif  // NCG_ERROR_H_
