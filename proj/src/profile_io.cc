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

#include "ncg/profile_io.h"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ncg/error.h"

namespace ncg {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::kParseError, "field \"" + field + "\": " + why);
}

void only_keys(const json& obj, const std::string& where,
               const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      bad(where.empty() ? key : where + "." + key, "unknown field");
    }
  }
}

long long integer(const json& obj, const std::string& key,
                  const std::string& where) {
  const std::string field = where.empty() ? key : where + "." + key;
  if (!obj.contains(key)) bad(field, "missing");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) bad(field, "expected an integer");
  return v.get<long long>();
}

}  // namespace

Profile parse_profile(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object()) bad("<root>", "expected an object");
  only_keys(doc, "", {"n", "alpha", "edges"});

  const long long n = integer(doc, "n", "");
  if (n < 0 || n > 100000) bad("n", "out of range");

  Profile out;
  if (doc.contains("alpha")) {
    const json& a = doc.at("alpha");
    Rational value;
    if (a.is_string()) {
      try {
        value = parse_rational(a.get<std::string>());
      } catch (const Error& e) {
        bad("alpha", e.what());
      }
    } else if (a.is_number_integer()) {
      value = Rational(a.get<std::int64_t>());
    } else {
      bad("alpha", "expected a \"p/q\" string or an integer");
    }
    if (value <= 0) {
      throw Error(ErrorCode::kParseError, ErrorCode::kInvalidArgument,
                  "field \"alpha\": must be positive");
    }
    out.alpha = Alpha(value);
  }

  if (!doc.contains("edges")) bad("edges", "missing");
  const json& edges = doc.at("edges");
  if (!edges.is_array()) bad("edges", "expected an array");
  std::vector<OwnedEdge> list;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_object()) bad(where, "expected an object");
    only_keys(e, where, {"u", "v", "owner"});
    const auto u = integer(e, "u", where);
    const auto v = integer(e, "v", where);
    const auto owner = integer(e, "owner", where);
    for (long long x : {u, v, owner}) {
      if (x < 0 || x >= n) {
        throw Error(ErrorCode::kParseError, ErrorCode::kIndexOutOfRange,
                    where + ": vertex " + std::to_string(x) +
                        " outside 0.." + std::to_string(n - 1));
      }
    }
    list.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                    static_cast<Vertex>(owner)});
  }
  try {
    out.graph = OwnedGraph::build(static_cast<int>(n), list);
  } catch (const Error& e) {
    const std::string detail = e.what();
    throw Error(ErrorCode::kParseError, e.code(),
                "edges: " + detail.substr(detail.find(": ") + 2));
  }
  return out;
}

std::string serialize_profile(const Profile& profile) {
  nlohmann::ordered_json doc;
  doc["n"] = profile.graph.n();
  if (profile.alpha) doc["alpha"] = to_string(*profile.alpha);
  doc["edges"] = nlohmann::ordered_json::array();
  for (const OwnedEdge& e : profile.graph.edges()) {
    doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"owner", e.owner}});
  }
  return doc.dump(2) + "\n";
}

Profile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_profile(buf.str());
  } catch (const Error& e) {
    // Re-raise with the path in front of the detail text.
    std::string detail = e.what();
    detail = path + ": " + detail.substr(detail.find(": ") + 2);
    if (e.cause()) throw Error(e.code(), *e.cause(), detail);
    throw Error(e.code(), detail);
  }
}

void save_profile(const Profile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << serialize_profile(profile);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "write failed: " + path);
}

}  // namespace ncg
