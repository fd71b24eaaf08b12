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

#ifndef NCG_REPORT_H_
#define NCG_REPORT_H_

#include <string>
#include <vector>

#include "ncg/case_audit.h"
#include "ncg/census.h"
#include "ncg/dynamics.h"
#include "ncg/equilibrium.h"
#include "ncg/lemmas.h"
#include "ncg/owned_graph.h"
#include "ncg/rational.h"

namespace ncg {

// Report writers. JSON documents are pretty-printed with two-space indent;
// every rational is a "p/q" string and every infinity the string "inf".

std::string verdict_json(const NashVerdict& verdict, const Alpha& alpha);
std::string interval_json(const AlphaInterval& interval);
std::string lemmas_json(const std::vector<LemmaReport>& reports,
                        const Alpha& alpha);
std::string case_audit_json(const CaseAudit& audit);
std::string census_json(const CensusResult& result);
std::string records_json(const std::vector<CensusRecord>& records);
std::string trajectory_json(const Trajectory& trajectory);

// Columns: canonicalId,n,intervalLo,loClosed,intervalHi,hiClosed,isTree,girth
std::string census_csv(const std::vector<CensusRecord>& records);

// Directed graph with one arc per edge, from the buyer to the other end.
std::string dot_export(const OwnedGraph& g);

}  // namespace ncg

#endif  // NCG_REPORT_H_
