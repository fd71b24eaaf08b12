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

#ifndef NCG_PROFILE_IO_H_
#define NCG_PROFILE_IO_H_

#include <optional>
#include <string>
#include <string_view>

#include "ncg/owned_graph.h"
#include "ncg/rational.h"

namespace ncg {

// On-disk profile:
//   {"n": 5, "alpha": "2/1", "edges": [{"u": 0, "v": 1, "owner": 0}, ...]}
// "alpha" is optional and may be a "p/q" string or an integer.
struct Profile {
  OwnedGraph graph;
  std::optional<Alpha> alpha;

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.graph == b.graph && a.alpha == b.alpha;
  }
};

// Strict: unknown fields, wrong types and invalid graphs are rejected with
// Error(kParseError) naming the line and column or the offending field.
// Graph defects carry their own code as the error's cause.
Profile parse_profile(std::string_view text);
std::string serialize_profile(const Profile& profile);

Profile load_profile(const std::string& path);
void save_profile(const Profile& profile, const std::string& path);

}  // namespace ncg

#endif  // NCG_PROFILE_IO_H_
