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

#include "ncg/cli.h"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "ncg/budget.h"
#include "ncg/case_audit.h"
#include "ncg/census.h"
#include "ncg/dynamics.h"
#include "ncg/equilibrium.h"
#include "ncg/error.h"
#include "ncg/lemmas.h"
#include "ncg/profile_io.h"
#include "ncg/report.h"

namespace ncg {
namespace {

struct Settings {
  std::string file;
  std::string alpha;
  std::string output;
  std::string budget;
  // census / hunt
  int n = 0;
  bool canonical = false;
  std::string format = "json";
  int workers = 1;
  bool lemmas = false;
  bool non_tree = false;
  std::string checkpoint;
  std::string alpha_lo;
  std::string alpha_hi;
  bool lo_open = false;
  bool hi_open = false;
  // dynamics
  std::string policy = "best";
  std::string schedule = "round-robin";
  std::uint64_t seed = 0;
  int max_rounds = 100;
};

void emit(const Settings& s, std::ostream& out, const std::string& text) {
  if (s.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(s.output);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + s.output);
  f << text;
}

Budget budget_of(const Settings& s) {
  Budget b = budget_from_environment();
  if (!s.budget.empty()) b = apply_budget_overrides(b, s.budget);
  return b;
}

Alpha alpha_of(const Settings& s, const Profile& p) {
  if (!s.alpha.empty()) return Alpha::parse(s.alpha);
  if (p.alpha) return *p.alpha;
  throw Error(ErrorCode::kInvalidArgument,
              "alpha required: pass --alpha or set it in the profile");
}

int verify(const Settings& s, std::ostream& out) {
  const Profile p = load_profile(s.file);
  const Alpha alpha = alpha_of(s, p);
  const NashVerdict v = is_nash(p.graph, alpha, budget_of(s));
  emit(s, out, verdict_json(v, alpha));
  return v.is_equilibrium ? kExitOk : kExitNegative;
}

int interval(const Settings& s, std::ostream& out) {
  const Profile p = load_profile(s.file);
  emit(s, out, interval_json(nash_alpha_interval(p.graph, budget_of(s))));
  return kExitOk;
}

int lemmas(const Settings& s, std::ostream& out) {
  const Profile p = load_profile(s.file);
  const Alpha alpha = alpha_of(s, p);
  const auto reports = run_all(p.graph, alpha, budget_of(s));
  emit(s, out, lemmas_json(reports, alpha));
  return summarize(reports).fail == 0 ? kExitOk : kExitNegative;
}

int audit(const Settings& s, std::ostream& out, std::ostream& err) {
  const Profile p = load_profile(s.file);
  const Alpha alpha = alpha_of(s, p);
  try {
    emit(s, out, case_audit_json(theorem_case_audit(p.graph, alpha, budget_of(s))));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPremiseFailure) throw;
    err << e.what() << "\n";
    return kExitNegative;
  }
  return kExitOk;
}

CensusOptions census_options(const Settings& s) {
  CensusOptions o;
  o.mode = s.canonical ? EnumerationMode::kCanonical : EnumerationMode::kLabeled;
  o.workers = s.workers;
  o.run_lemmas = s.lemmas;
  o.non_tree_only = s.non_tree;
  if (!s.checkpoint.empty()) o.checkpoint_path = s.checkpoint;
  o.budget = budget_of(s);
  return o;
}

std::optional<AlphaInterval> query_of(const Settings& s) {
  if (s.alpha_lo.empty() && s.alpha_hi.empty() && s.alpha.empty()) {
    return std::nullopt;
  }
  if (!s.alpha.empty()) {
    return AlphaInterval::point(Alpha::parse(s.alpha).value());
  }
  const Rational lo = s.alpha_lo.empty() ? Rational(0) : parse_rational(s.alpha_lo);
  std::optional<Rational> hi;
  if (!s.alpha_hi.empty() && s.alpha_hi != "inf") hi = parse_rational(s.alpha_hi);
  return AlphaInterval::between(lo, !s.lo_open && !s.alpha_lo.empty(), hi,
                                !s.hi_open);
}

void check_format(const Settings& s) {
  if (s.format != "csv" && s.format != "json") {
    throw Error(ErrorCode::kInvalidArgument, "--out must be csv or json");
  }
}

int census_cmd(const Settings& s, std::ostream& out) {
  check_format(s);
  CensusOptions o = census_options(s);
  o.alpha_filter = query_of(s);
  const CensusResult r = census(s.n, o);
  emit(s, out, s.format == "csv" ? census_csv(r.records) : census_json(r));
  const bool bad = !r.summary.theorem_violations.empty() ||
                   r.summary.lemma_failures > 0;
  return bad ? kExitNegative : kExitOk;
}

int hunt(const Settings& s, std::ostream& out) {
  check_format(s);
  const auto q = query_of(s);
  if (!q) {
    throw Error(ErrorCode::kInvalidArgument,
                "hunt needs --alpha or --alpha-lo/--alpha-hi");
  }
  const auto records = hunt_nontree(s.n, *q, census_options(s));
  emit(s, out, s.format == "csv" ? census_csv(records) : records_json(records));
  return records.empty() ? kExitOk : kExitNegative;
}

int dynamics_cmd(const Settings& s, std::ostream& out) {
  const Profile p = load_profile(s.file);
  DynamicsOptions o;
  if (s.policy == "best") {
    o.policy = DynamicsPolicy::kBestResponse;
  } else if (s.policy == "first") {
    o.policy = DynamicsPolicy::kFirstImprovement;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "--policy must be best or first");
  }
  if (s.schedule == "round-robin") {
    o.schedule = DynamicsSchedule::kRoundRobin;
  } else if (s.schedule == "random") {
    o.schedule = DynamicsSchedule::kRandom;
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "--schedule must be round-robin or random");
  }
  o.seed = s.seed;
  o.max_rounds = s.max_rounds;
  o.budget = budget_of(s);
  const Trajectory t = dynamics(p.graph, alpha_of(s, p), o);
  emit(s, out, trajectory_json(t));
  return t.status == TerminalStatus::kConverged ? kExitOk : kExitNegative;
}

int export_dot(const Settings& s, std::ostream& out) {
  emit(s, out, dot_export(load_profile(s.file).graph));
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Settings s;
  CLI::App app{"Exact workbench for the network creation game", "ncg"};
  app.set_config("--config", "", "Read option defaults from a TOML/INI file");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--budget", s.budget,
                 "Enumeration caps, e.g. deviation_n=16,labeled_n=5 "
                 "(overrides NCG_BUDGET)");
  app.add_option("-o,--output", s.output, "Write the report to a file");

  auto add_file = [&](CLI::App* c) {
    c->add_option("file", s.file, "Profile JSON")->required();
  };
  auto add_alpha = [&](CLI::App* c) {
    c->add_option("--alpha", s.alpha, "Edge price p/q (default: from file)");
  };

  CLI::App* verify_cmd = app.add_subcommand("verify", "Nash verdict at alpha");
  add_file(verify_cmd);
  add_alpha(verify_cmd);

  CLI::App* interval_cmd =
      app.add_subcommand("interval", "Exact set of alpha with an equilibrium");
  add_file(interval_cmd);

  CLI::App* lemmas_cmd = app.add_subcommand("lemmas", "Run every lemma checker");
  add_file(lemmas_cmd);
  add_alpha(lemmas_cmd);

  CLI::App* audit_cmd =
      app.add_subcommand("audit", "Case audit of the tree argument");
  add_file(audit_cmd);
  add_alpha(audit_cmd);

  auto add_search = [&](CLI::App* c) {
    c->add_option("-n", s.n, "Number of vertices")->required();
    c->add_flag("--canonical", s.canonical, "One profile per isomorphism class");
    c->add_option("--out", s.format, "csv or json");
    c->add_option("--workers", s.workers, "Worker threads");
    c->add_flag("--lemmas", s.lemmas, "Run lemma checkers on every record");
    c->add_option("--checkpoint", s.checkpoint, "Resume file");
    c->add_option("--alpha-lo", s.alpha_lo, "Query lower end p/q");
    c->add_option("--alpha-hi", s.alpha_hi, "Query upper end p/q or inf");
    c->add_flag("--lo-open", s.lo_open, "Exclude the lower end");
    c->add_flag("--hi-open", s.hi_open, "Exclude the upper end");
    c->add_option("--alpha", s.alpha, "Single-point query");
  };
  CLI::App* census_app = app.add_subcommand("census", "Exhaustive census");
  add_search(census_app);
  census_app->add_flag("--non-tree", s.non_tree, "Only non-tree records");
  CLI::App* hunt_cmd =
      app.add_subcommand("hunt", "Non-tree equilibria meeting an alpha range");
  add_search(hunt_cmd);

  CLI::App* dyn_cmd = app.add_subcommand("dynamics", "Improvement dynamics");
  add_file(dyn_cmd);
  add_alpha(dyn_cmd);
  dyn_cmd->add_option("--policy", s.policy, "best or first");
  dyn_cmd->add_option("--schedule", s.schedule, "round-robin or random");
  dyn_cmd->add_option("--seed", s.seed, "Seed for the random schedule");
  dyn_cmd->add_option("--max-rounds", s.max_rounds, "Round limit");

  CLI::App* dot_cmd = app.add_subcommand("export-dot", "Graphviz export");
  add_file(dot_cmd);

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1
                                                    : args.end(),
                                    args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (verify_cmd->parsed()) return verify(s, out);
    if (interval_cmd->parsed()) return interval(s, out);
    if (lemmas_cmd->parsed()) return lemmas(s, out);
    if (audit_cmd->parsed()) return audit(s, out, err);
    if (census_app->parsed()) return census_cmd(s, out);
    if (hunt_cmd->parsed()) return hunt(s, out);
    if (dyn_cmd->parsed()) return dynamics_cmd(s, out);
    if (dot_cmd->parsed()) return export_dot(s, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    const bool budget = e.code() == ErrorCode::kBudgetExceeded ||
                        e.code() == ErrorCode::kCandidateBudgetExceeded;
    return budget ? kExitBudget : kExitInputError;
  }
  return kExitInputError;
}

}  // namespace ncg
