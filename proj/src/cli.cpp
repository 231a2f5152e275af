// Copyright 2026 The ACE Toolkit Authors
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

#include "ace/cli.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ace/bank_io.hpp"
#include "ace/error.hpp"
#include "ace/generator.hpp"
#include "ace/interpreter.hpp"
#include "ace/io.hpp"
#include "ace/oracles.hpp"
#include "ace/report.hpp"
#include "ace/responses.hpp"

namespace ace {

namespace {

// Raised for command-level problems that are not library errors, e.g. a grid
// file without an avatar when one is needed.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  bool json = false;
  // run / enumerate
  std::string grid_file, program_file, start, vary = "avatar";
  bool trace = false;
  int step_limit = kDefaultStepLimit;
  int budget = 1;
  // generate / simulate
  std::uint64_t seed = 0;
  std::string shape = "7,7,7";
  std::string out_file;
  int persons = 371;
  // validate / analyze / simulate
  std::string bank_file, responses_file;
  bool bias_correction = false;
};

std::string dump(const ordered_json& j) { return j.dump(2); }

ordered_json state_json(const AvatarState& s) {
  return {{"cell", cell_name(s.pos)}, {"dir", direction_name(s.dir)}};
}

std::string action_text(const Action& a) {
  switch (a.kind) {
    case ActionKind::Move: return "move";
    case ActionKind::TurnLeft: return "turn_left";
    case ActionKind::TurnRight: return "turn_right";
    case ActionKind::CondEval:
      return std::string(condition_keyword(a.cond)) + (a.result ? "=true" : "=false");
  }
  return "?";
}

struct Setup {
  Grid grid;
  std::optional<AvatarState> avatar;
  Program program;
};

Setup load_task(const Options& o) {
  GridText gt = parse_grid(read_file(o.grid_file));
  Setup t{std::move(gt.grid), gt.avatar, parse_program(read_file(o.program_file))};
  if (!o.start.empty()) {
    const auto colon = o.start.find(':');
    if (colon == std::string::npos) throw UsageError("--start expects CELL:DIR, e.g. b2:East");
    const auto dir = direction_from_name(o.start.substr(colon + 1));
    if (!dir) throw UsageError("unknown direction '" + o.start.substr(colon + 1) + "'");
    t.avatar = AvatarState{parse_cell_name(o.start.substr(0, colon)), *dir};
  }
  return t;
}

void require_grid(const Grid& g, bool require_goal) {
  const auto problems = g.check(require_goal);
  if (!problems.empty()) throw UsageError("invalid grid: " + problems.front());
}

AvatarState require_avatar(const Setup& t) {
  if (!t.avatar) throw UsageError("grid has no avatar marker (> v < ^) and no --start was given");
  if (!t.grid.valid_start(*t.avatar)) throw UsageError("avatar start " + cell_name(t.avatar->pos) + " is not a free cell");
  return *t.avatar;
}

int cmd_run(const Options& o, std::ostream& out) {
  const Setup t = load_task(o);
  require_grid(t.grid, true);
  const AvatarState start = require_avatar(t);
  const Execution ex = execute(t.grid, start, t.program, o.step_limit);
  const Outcome& oc = ex.outcome;
  const int step = oc.kind == OutcomeKind::GoalReached || oc.kind == OutcomeKind::Crashed
                       ? oc.at_step
                       : static_cast<int>(ex.trace.size());
  std::string attempted;
  if (oc.attempted) attempted = oc.attempted_boundary ? "boundary" : cell_name(*oc.attempted);

  if (o.json) {
    ordered_json j;
    ordered_json outcome = {{"kind", outcome_name(oc.kind)}, {"step", step}, {"final", state_json(oc.final_state)}};
    if (oc.attempted) {
      outcome["attempted"] = attempted;
      outcome["attempted_boundary"] = oc.attempted_boundary;
    }
    j["outcome"] = outcome;
    j["steps"] = ex.trace.size();
    if (o.trace) {
      j["trace"] = ordered_json::array();
      for (const TraceEvent& e : ex.trace) {
        ordered_json ev = {{"step", e.step}, {"action", action_text(e.action)}};
        ev.update(state_json(e.state_after));
        j["trace"].push_back(ev);
      }
    }
    out << dump(j) << '\n';
    return kExitOk;
  }
  if (o.trace) {
    for (const TraceEvent& e : ex.trace) {
      out << e.step << ' ' << action_text(e.action) << ' ' << cell_name(e.state_after.pos) << ' '
          << direction_name(e.state_after.dir) << '\n';
    }
  }
  out << outcome_name(oc.kind) << " step=" << step << " at=" << cell_name(oc.final_state.pos);
  if (oc.attempted) out << " attempted=" << attempted;
  if (oc.kind == OutcomeKind::IncompleteStop) out << " facing=" << direction_name(oc.final_state.dir);
  out << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const Setup t = load_task(o);
  ordered_json j;
  j["mode"] = o.vary;
  if (o.vary == "avatar") {
    require_grid(t.grid, true);
    const StartSet starts = enumerate_avatar_starts(t.grid, t.program);
    j["count"] = starts.size();
    j["positions"] = distinct_positions(starts);
    j["starts"] = ordered_json::array();
    for (const AvatarState& s : starts) j["starts"].push_back(state_json(s));
    if (!o.json) {
      out << "avatar starts: " << starts.size() << " (" << distinct_positions(starts) << " cells)\n";
      for (const AvatarState& s : starts) out << "  " << cell_name(s.pos) << ' ' << direction_name(s.dir) << '\n';
    }
  } else if (o.vary == "goal") {
    require_grid(t.grid, false);
    const AvatarState start = require_avatar(t);
    const auto cells = enumerate_goal_cells(t.grid, start, t.program);
    j["count"] = cells.size();
    j["cells"] = ordered_json::array();
    for (const Position& p : cells) j["cells"].push_back(cell_name(p));
    if (!o.json) {
      out << "goal cells: " << cells.size() << '\n';
      for (const Position& p : cells) out << "  " << cell_name(p) << '\n';
    }
  } else {
    require_grid(t.grid, true);
    const AvatarState start = require_avatar(t);
    const auto candidates = wall_candidates(t.grid, start);
    const std::uint64_t n = count_wall_configurations(t.grid, start, t.program, o.budget);
    j["budget"] = o.budget;
    j["candidates"] = candidates.size();
    j["count"] = n;
    if (!o.json) out << "wall configurations (budget " << o.budget << "): " << n << '\n';
  }
  if (o.json) out << dump(j) << '\n';
  return kExitOk;
}

BankShape parse_shape(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(part, &used);
      if (used != part.size() || n < 0) throw UsageError("");
      v.push_back(n);
    } catch (const std::exception&) {
      throw UsageError("--shape expects three non-negative integers, e.g. 7,7,7");
    }
  }
  if (v.size() != 3) throw UsageError("--shape expects three non-negative integers, e.g. 7,7,7");
  return {v[0], v[1], v[2]};
}

int cmd_generate(const Options& o, std::ostream& out) {
  const ItemBank bank = generate_bank(o.seed, parse_shape(o.shape));
  const ValidationReport rep = validate_bank(bank);
  if (!rep.clean()) {
    throw std::runtime_error("generated bank failed validation: " + rep.findings.front().item_id + " " +
                             rep.findings.front().message);
  }
  save_bank(bank, o.out_file);

  std::map<BloomCategory, std::map<std::string, int>> kinds;
  for (const Item& it : bank.items) kinds[it.category][std::string(kind_name(it.kind))] += 1;
  if (o.json) {
    ordered_json j = {{"out", o.out_file}, {"name", bank.name}, {"items", bank.items.size()}};
    j["categories"] = ordered_json::array();
    for (const auto& [cat, ks] : kinds) {
      int n = 0;
      for (const auto& kv : ks) n += kv.second;
      j["categories"].push_back({{"label", category_label(cat)}, {"items", n}, {"kinds", ks}});
    }
    out << dump(j) << '\n';
    return kExitOk;
  }
  out << "wrote " << bank.items.size() << " items to " << o.out_file << '\n';
  for (const auto& [cat, ks] : kinds) {
    int n = 0;
    std::string detail;
    for (const auto& [k, c] : ks) {
      n += c;
      detail += (detail.empty() ? "" : ", ") + k + " " + std::to_string(c);
    }
    out << "  " << category_label(cat) << ": " << n << " (" << detail << ")\n";
  }
  return kExitOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string text = read_file(o.bank_file);
  ItemBank bank;
  try {
    bank = parse_bank(text);
  } catch (const SchemaError& e) {
    if (o.json) {
      out << dump({{"clean", false}, {"schema_errors", {{{"path", e.path()}, {"message", e.what()}}}}}) << '\n';
    } else {
      out << "schema error at " << e.path() << '\n';
    }
    err << "ace: " << e.what() << '\n';
    return kExitFindings;
  }
  const ValidationReport rep = validate_bank(bank);
  if (o.json) {
    ordered_json f = ordered_json::array();
    for (const Finding& x : rep.findings) f.push_back({{"item", x.item_id}, {"code", x.code}, {"message", x.message}});
    out << dump({{"bank", bank.name}, {"items", bank.items.size()}, {"clean", rep.clean()}, {"findings", f}}) << '\n';
  } else {
    for (const Finding& x : rep.findings) out << x.item_id << ": " << x.code << ": " << x.message << '\n';
    out << bank.items.size() << " items, " << rep.findings.size() << " findings\n";
  }
  return rep.clean() ? kExitOk : kExitFindings;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const std::string csv = read_file(o.responses_file);
  const std::string bank_text = read_file(o.bank_file);
  const ResponseTable table = parse_responses(csv);
  const ItemBank bank = parse_bank(bank_text);
  RaschOptions ro;
  ro.bias_correction = o.bias_correction;
  const ordered_json report = analyze(table, bank, {sha256_hex(csv), sha256_hex(bank_text)}, ro);
  if (!o.out_file.empty()) write_file_atomic(o.out_file, report.dump(2) + "\n");
  if (o.json) {
    out << dump(report) << '\n';
    return kExitOk;
  }
  const auto& d = report["descriptive"];
  const auto& r = report["rasch"];
  char buf[256];
  std::snprintf(buf, sizeof buf, "persons %d, items %d, mean score %.2f (sd %.2f)\n", d["persons"].get<int>(),
                d["items"].get<int>(), d["mean_score"].get<double>(), d["sd_score"].get<double>());
  out << buf;
  std::snprintf(buf, sizeof buf, "Cronbach alpha %.3f\n", d["alpha_overall"].get<double>());
  out << buf;
  for (const auto& c : d["categories"]) {
    out << "  " << c["label"].get<std::string>() << " mean " ;
    std::snprintf(buf, sizeof buf, "%.2f", c["mean_subscore"].get<double>());
    out << buf << ", alpha ";
    if (c["alpha"].is_null()) {
      out << "undefined\n";
    } else {
      std::snprintf(buf, sizeof buf, "%.3f\n", c["alpha"].get<double>());
      out << buf;
    }
  }
  std::snprintf(buf, sizeof buf, "Rasch (JML): %s after %d sweeps, person reliability %.3f\n",
                r["converged"].get<bool>() ? "converged" : "NOT converged", r["iterations"].get<int>(),
                r["person_reliability"].get<double>());
  out << buf;
  if (const auto& ext = report["correlations"]["total_vs_external"]; !ext.is_null()) {
    std::snprintf(buf, sizeof buf, "total vs external_score: r = %.3f, p = %.3g, n = %d\n", ext["r"].get<double>(),
                  ext["p"].get<double>(), ext["n"].get<int>());
    out << buf;
  }
  if (const auto& w = report["welch_after_school"]; !w.is_null()) {
    std::snprintf(buf, sizeof buf, "after-school vs not: t = %.3f, df = %.1f, p = %.3g\n", w["t"].get<double>(),
                  w["df"].get<double>(), w["p"].get<double>());
    out << buf;
  }
  for (const auto& n : report["notes"]) out << "note: " << n.get<std::string>() << '\n';
  if (!o.out_file.empty()) out << "report written to " << o.out_file << '\n';
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const ItemBank bank = load_bank(o.bank_file);
  const ResponseTable table = simulate_responses(bank, {o.seed, o.persons});
  write_file_atomic(o.out_file, format_responses(table));
  if (o.json) {
    out << dump({{"out", o.out_file}, {"persons", table.matrix.persons()}, {"items", table.matrix.items()}}) << '\n';
  } else {
    out << "wrote " << table.matrix.persons() << " simulated response rows to " << o.out_file << '\n';
  }
  return kExitOk;
}

int fail(const Options& o, std::ostream& out, std::ostream& err, int code, std::string_view kind,
         const std::string& message) {
  err << "ace: " << message << '\n';
  if (o.json) out << dump({{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}) << '\n';
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Maze-programming test items: run, enumerate, generate, validate, analyze", "ace"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* run = app.add_subcommand("run", "Execute a program on a grid");
  run->add_option("grid", o.grid_file, "Grid file (ASCII form)")->required();
  run->add_option("program", o.program_file, "Program file")->required();
  run->add_flag("--trace", o.trace, "Print every step");
  run->add_option("--step-limit", o.step_limit, "Step limit")->check(CLI::PositiveNumber);
  run->add_option("--start", o.start, "Override the avatar, e.g. b2:East");

  auto* en = app.add_subcommand("enumerate", "Brute-force design questions");
  en->add_option("grid", o.grid_file, "Grid file")->required();
  en->add_option("program", o.program_file, "Program file")->required();
  en->add_option("--vary", o.vary, "What to vary")->check(CLI::IsMember({"avatar", "goal", "walls"}));
  en->add_option("--budget", o.budget, "Maximum extra walls (walls mode)");
  en->add_option("--start", o.start, "Override the avatar, e.g. b2:East");

  auto* gen = app.add_subcommand("generate", "Generate an oracle-verified item bank");
  gen->add_option("--seed", o.seed, "Seed")->required();
  gen->add_option("--shape", o.shape, "Items per category, e.g. 7,7,7");
  gen->add_option("--out", o.out_file, "Output bank file")->required();

  auto* val = app.add_subcommand("validate", "Validate an item bank");
  val->add_option("bank", o.bank_file, "Bank file")->required();

  auto* an = app.add_subcommand("analyze", "Reliability and validity report for a response file");
  an->add_option("responses", o.responses_file, "Response CSV")->required();
  an->add_option("--bank", o.bank_file, "Bank file")->required();
  an->add_option("--out", o.out_file, "Report file (JSON)");
  an->add_flag("--bias-correction", o.bias_correction, "Apply the (k-1)/k JML correction");

  auto* sim = app.add_subcommand("simulate", "Simulate Rasch responses to a bank");
  sim->add_option("--bank", o.bank_file, "Bank file")->required();
  sim->add_option("--seed", o.seed, "Seed")->required();
  sim->add_option("--persons", o.persons, "Number of persons")->check(CLI::Range(2, 1000000));
  sim->add_option("--out", o.out_file, "Output CSV")->required();

  for (CLI::App* sub : {run, en, gen, val, an, sim}) sub->add_flag("--json", o.json, "Machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    const bool wants_json = std::find(args.begin(), args.end(), "--json") != args.end();
    err << "ace: " << e.what() << '\n';
    if (wants_json) out << dump({{"error", {{"kind", "usage"}, {"message", e.what()}, {"exit_code", 2}}}}) << '\n';
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (gen->parsed()) return cmd_generate(o, out);
    if (val->parsed()) return cmd_validate(o, out, err);
    if (an->parsed()) return cmd_analyze(o, out);
    if (sim->parsed()) return cmd_simulate(o, out);
  } catch (const ParseError& e) {
    return fail(o, out, err, kExitUsage, "parse", e.what());
  } catch (const SchemaError& e) {
    return fail(o, out, err, kExitUsage, "schema", e.what());
  } catch (const BudgetError& e) {
    return fail(o, out, err, kExitUsage, "budget", e.what());
  } catch (const UndefinedStatistic& e) {
    return fail(o, out, err, kExitUsage, "undefined", e.what());
  } catch (const GenerationExhausted& e) {
    return fail(o, out, err, kExitInternal, "exhausted", e.what());
  } catch (const ItemIntegrityError& e) {
    return fail(o, out, err, kExitInternal, "integrity", e.what());
  } catch (const Error& e) {
    // Contract violations, unreadable files and command-level usage errors.
    return fail(o, out, err, kExitUsage, "input", e.what());
  } catch (const std::exception& e) {
    return fail(o, out, err, kExitInternal, "internal", e.what());
  }
  return kExitUsage;
}

}  // namespace ace
