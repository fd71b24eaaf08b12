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

#include "ncg/report.h"

#include <sstream>

#include <json.hpp>

namespace ncg {
namespace {

using Json = nlohmann::ordered_json;

std::string hops_text(const Hops& h) {
  std::ostringstream out;
  out << h;
  return out.str();
}

std::string edge_text(const EdgeKey& e) {
  return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}";
}

Json interval_doc(const AlphaInterval& iv) {
  Json j;
  j["text"] = iv.to_string();
  j["empty"] = iv.empty();
  if (!iv.empty()) {
    j["lower"] = to_string(iv.lower());
    j["lowerClosed"] = iv.lower_closed();
    j["upper"] = iv.upper() ? to_string(*iv.upper()) : "inf";
    j["upperClosed"] = iv.upper_closed();
  }
  return j;
}

Json delta_doc(const DeviationDelta& d) {
  Json j;
  j["deltaBuild"] = d.delta_build;
  j["deltaDist"] = hops_text(d.delta_dist);
  return j;
}

Json lemma_doc(const LemmaReport& r) {
  Json j;
  j["lemma"] = to_string(r.id);
  j["verdict"] = to_string(r.verdict);
  j["applicable"] = r.applicable;
  j["reasons"] = r.reasons;
  if (r.structural) j["structural"] = *r.structural;
  if (r.threshold) j["threshold"] = to_string(*r.threshold);
  Json w = Json::object();
  for (const auto& [k, v] : r.witness) w[k] = v;
  j["witness"] = w;
  j["notes"] = r.notes;
  return j;
}

Json record_doc(const CensusRecord& r) {
  Json j;
  j["canonicalId"] = r.canonical_id;
  j["n"] = r.n;
  j["interval"] = interval_doc(r.interval);
  j["isTree"] = r.is_tree;
  j["edges"] = r.edge_count;
  j["girth"] = hops_text(r.girth);
  j["cyclicComponents"] = r.cyclic_components;
  j["kMax"] = r.k_max ? Json(*r.k_max) : Json(nullptr);
  j["multiplicity"] = r.multiplicity;
  Json pts = Json::array();
  for (const Rational& a : r.sample_points) pts.push_back(to_string(a));
  j["samplePoints"] = pts;
  if (r.lemmas) {
    j["lemmas"] = {{"pass", r.lemmas->pass},
                   {"fail", r.lemmas->fail},
                   {"vacuous", r.lemmas->vacuous},
                   {"failures", r.lemma_failures}};
  }
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string verdict_json(const NashVerdict& verdict, const Alpha& alpha) {
  Json j;
  j["alpha"] = to_string(alpha);
  j["isEquilibrium"] = verdict.is_equilibrium;
  if (verdict.witness) {
    const NashWitness& w = *verdict.witness;
    Json wj;
    wj["vertex"] = w.vertex;
    wj["deviation"] = w.deviation;
    wj["delta"] = delta_doc(w.delta);
    wj["costChange"] = to_string(w.delta.at(alpha));
    j["witness"] = wj;
  }
  return dump(j);
}

std::string interval_json(const AlphaInterval& interval) {
  return dump(interval_doc(interval));
}

std::string lemmas_json(const std::vector<LemmaReport>& reports,
                        const Alpha& alpha) {
  Json j;
  j["alpha"] = to_string(alpha);
  const LemmaSummary s = summarize(reports);
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"vacuous", s.vacuous}};
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(lemma_doc(r));
  j["reports"] = list;
  return dump(j);
}

std::string case_audit_json(const CaseAudit& a) {
  Json j;
  j["cycle"] = a.cycle;
  j["kMax"] = a.k_max;
  j["r1"] = a.r1;
  j["r2"] = a.r2;
  j["r3"] = a.r3;
  j["p1"] = a.p1;
  j["p1Length"] = a.p1_length;
  j["e1"] = a.e1 ? Json(edge_text(*a.e1)) : Json(nullptr);
  j["f1"] = edge_text(a.f1);
  j["f2"] = edge_text(a.f2);
  j["f3"] = a.f3 ? Json(edge_text(*a.f3)) : Json(nullptr);
  j["gamma"] = a.gamma ? Json(to_string(*a.gamma)) : Json(nullptr);
  j["equilibrium"] = a.equilibrium;
  Json cases = Json::array();
  for (const CaseRecord& c : a.cases) {
    Json cj;
    cj["case"] = c.case_id;
    cj["premiseHolds"] =
        c.premise_holds ? Json(*c.premise_holds) : Json(nullptr);
    cj["value"] = c.value ? Json(to_string(*c.value)) : Json(nullptr);
    cj["description"] = c.description;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  j["firstCase"] = a.first_case ? Json(*a.first_case) : Json(nullptr);
  j["notes"] = a.notes;
  return dump(j);
}

std::string records_json(const std::vector<CensusRecord>& records) {
  Json list = Json::array();
  for (const auto& r : records) list.push_back(record_doc(r));
  return dump(list);
}

std::string census_json(const CensusResult& result) {
  const CensusSummary& s = result.summary;
  Json j;
  j["n"] = s.n;
  j["summary"] = {{"profilesExamined", s.profiles_examined},
                  {"equilibriumProfiles", s.equilibrium_profiles},
                  {"classes", s.classes},
                  {"theoremViolations", s.theorem_violations},
                  {"conjectureViolations", s.conjecture_violations},
                  {"lemmaFailures", s.lemma_failures}};
  Json list = Json::array();
  for (const auto& r : result.records) list.push_back(record_doc(r));
  j["records"] = list;
  return dump(j);
}

std::string trajectory_json(const Trajectory& t) {
  Json j;
  j["status"] = to_string(t.status);
  j["rounds"] = t.rounds;
  Json moves = Json::array();
  for (const DynamicsMove& m : t.moves) {
    Json mj;
    mj["round"] = m.round;
    mj["mover"] = m.mover;
    mj["deviation"] = m.deviation;
    mj["delta"] = delta_doc(m.delta);
    mj["profile"] = m.profile_id;
    moves.push_back(mj);
  }
  j["moves"] = moves;
  Json edges = Json::array();
  for (const OwnedEdge& e : t.final_profile.edges()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"owner", e.owner}});
  }
  j["final"] = {{"n", t.final_profile.n()}, {"edges", edges}};
  return dump(j);
}

std::string census_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream out;
  out << "canonicalId,n,intervalLo,loClosed,intervalHi,hiClosed,isTree,girth\n";
  for (const CensusRecord& r : records) {
    const AlphaInterval& iv = r.interval;
    out << r.canonical_id << ',' << r.n << ',' << to_string(iv.lower()) << ','
        << (iv.lower_closed() ? "true" : "false") << ','
        << (iv.upper() ? to_string(*iv.upper()) : "inf") << ','
        << (iv.upper_closed() ? "true" : "false") << ','
        << (r.is_tree ? "true" : "false") << ',' << hops_text(r.girth) << '\n';
  }
  return out.str();
}

std::string dot_export(const OwnedGraph& g) {
  std::ostringstream out;
  out << "digraph profile {\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (const OwnedEdge& e : g.edges()) {
    out << "  " << e.owner << " -> " << e.target() << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ncg
