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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every threshold below is fixed; none are tuned per run.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ace/bank_io.hpp"
#include "ace/error.hpp"
#include "ace/generator.hpp"
#include "ace/interpreter.hpp"
#include "ace/oracles.hpp"
#include "ace/psychometrics.hpp"
#include "ace/report.hpp"
#include "ace/responses.hpp"
#include "ace/rng.hpp"
#include "support/brute.hpp"
#include "support/golden.hpp"
#include "support/random_cases.hpp"

using namespace ace;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few failure messages of a criterion.
struct Check {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  bool ok() const { return failures == 0; }
};

int g_failed = 0;

void report(int n, const std::string& title, const Check& c, double secs, const std::string& detail) {
  std::printf("%s  criterion %d  %-28s %8.3fs  %s\n", c.ok() ? "PASS" : "FAIL", n, title.c_str(), secs,
              detail.c_str());
  for (const std::string& note : c.notes) std::printf("      - %s\n", note.c_str());
  if (!c.ok()) ++g_failed;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// --- 1 ------------------------------------------------------------------

void golden_suite() {
  const auto t0 = Clock::now();
  Check c;
  const auto& cases = golden::cases();
  c.expect(cases.size() >= 20, "fewer than 20 fixtures");
  std::set<std::string> kinds;
  for (const golden::Case& g : cases) {
    const GridText gt = parse_grid(g.grid);
    const Execution ex = execute(gt.grid, *gt.avatar, parse_program(g.program), g.step_limit);
    std::vector<std::string> got;
    for (const TraceEvent& e : ex.trace) got.push_back(golden::render_event(e));
    c.expect(got == g.trace, std::string(g.name) + ": trace differs");
    const std::string outcome = golden::render_outcome(ex.outcome);
    c.expect(outcome == g.outcome, std::string(g.name) + ": got " + outcome);
    kinds.insert(outcome.substr(0, outcome.find(' ')));
    if (ex.outcome.kind == OutcomeKind::Crashed) {
      kinds.insert(gt.grid.in_bounds(*ex.outcome.attempted) ? "crash-wall" : "crash-boundary");
    }
    // Goal inside a loop: without the goal the same run would have continued.
    if (ex.outcome.kind == OutcomeKind::GoalReached && std::string(g.program).find("repeat") != std::string::npos) {
      Grid open = gt.grid;
      open.set_goal(std::nullopt);
      if (execute(open, *gt.avatar, parse_program(g.program), g.step_limit).trace.size() > ex.trace.size()) {
        kinds.insert("goal-in-loop");
      }
    }
  }
  for (const char* k : {"crash-wall", "crash-boundary", "goal-in-loop", "StepLimitExceeded"}) {
    c.expect(kinds.contains(k), std::string("no fixture covers ") + k);
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 1.0, "runtime " + fmt("%.3f", secs) + "s >= 1s");
  report(1, "interpreter golden suite", c, secs, std::to_string(cases.size()) + " fixtures");
}

// --- 2 ------------------------------------------------------------------

Program prefixed(std::vector<Block> head, const Program& p) {
  head.insert(head.end(), p.blocks.begin(), p.blocks.end());
  return Program(std::move(head));
}

// `b` runs `shift` extra leading steps and otherwise matches `a`.
bool shifted(const Execution& a, const Execution& b, std::size_t shift) {
  if (b.trace.size() != a.trace.size() + shift) return false;
  for (std::size_t k = 0; k < a.trace.size(); ++k) {
    const TraceEvent &x = a.trace[k], &y = b.trace[k + shift];
    if (y.step != x.step + static_cast<int>(shift) || !(y.action == x.action) ||
        !(y.state_after == x.state_after)) {
      return false;
    }
  }
  return a.outcome.kind == b.outcome.kind && a.outcome.final_state == b.outcome.final_state;
}

void semantics_properties() {
  const auto t0 = Clock::now();
  Check c;
  testgen::SplitMix rng(20261018);
  const Block tl = Block::turn_left(), tr = Block::turn_right();
  for (int i = 0; i < 1000; ++i) {
    const Grid g = testgen::random_grid(rng, 6);
    const AvatarState s = testgen::random_start(rng, g);
    const Program p = testgen::random_program(rng, 15);
    const std::string tag = "case " + std::to_string(i) + ": ";
    const Execution a = execute(g, s, p);

    c.expect(a == execute(g, s, p), tag + "non-deterministic");

    const int n = rng.range(1, 4);
    Program unrolled;
    for (int k = 0; k < n; ++k) unrolled.blocks.insert(unrolled.blocks.end(), p.blocks.begin(), p.blocks.end());
    c.expect(execute(g, s, Program({Block::repeat(n, p.blocks)})) == execute(g, s, unrolled),
             tag + "repeat unrolling");

    const int limit = kDefaultStepLimit;
    c.expect(shifted(a, execute(g, s, prefixed({tl, tr}, p), limit + 2), 2), tag + "left.right != id");
    c.expect(shifted(a, execute(g, s, prefixed({tr, tl}, p), limit + 2), 2), tag + "right.left != id");
    c.expect(shifted(a, execute(g, s, prefixed({tl, tl, tl, tl}, p), limit + 4), 4), tag + "left^4 != id");
    c.expect(shifted(a, execute(g, s, prefixed({tr, tr, tr, tr}, p), limit + 4), 4), tag + "right^4 != id");
    const Execution l2 = execute(g, s, prefixed({tl, tl}, p));
    const Execution r2 = execute(g, s, prefixed({tr, tr}, p));
    c.expect(l2.outcome == r2.outcome, tag + "left^2 != right^2");

    if (a.outcome.kind == OutcomeKind::GoalReached) {
      c.expect(a.outcome.final_state.pos == *g.goal(), tag + "goal but final position elsewhere");
    }
  }
  report(2, "semantics properties", c, seconds_since(t0), "1000 cases, " + std::to_string(c.failures) + " violations");
}

// --- 3 ------------------------------------------------------------------

void enumeration() {
  const auto t0 = Clock::now();
  Check c;
  testgen::SplitMix rng(4242);
  double slowest = 0;
  for (int i = 0; i < 200; ++i) {
    const Grid g = testgen::random_grid(rng, 5);
    const AvatarState s = testgen::random_start(rng, g);
    const Program p = testgen::random_program(rng, 10);
    const int budget = i % 3;
    const auto t = Clock::now();
    std::set<std::tuple<int, int, int>> got;
    for (const AvatarState& a : enumerate_avatar_starts(g, p)) {
      got.insert({a.pos.col, a.pos.row, static_cast<int>(a.dir)});
    }
    const std::uint64_t walls = count_wall_configurations(g, s, p, budget);
    slowest = std::max(slowest, seconds_since(t));
    const std::string tag = "case " + std::to_string(i) + ": ";
    c.expect(got == brute::avatar_starts(g, p), tag + "avatar starts differ");
    c.expect(walls == brute::wall_configurations(g, s, p, budget), tag + "wall count differs");
  }
  c.expect(slowest < 1.0, "slowest case " + fmt("%.3f", slowest) + "s");
  report(3, "enumeration vs brute force", c, seconds_since(t0), "200 cases, slowest " + fmt("%.4f", slowest) + "s");
}

// --- 4 ------------------------------------------------------------------

void generator_integrity() {
  const auto t0 = Clock::now();
  Check c;
  int items = 0;
  for (BloomCategory cat : kAllCategories) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const GenSpec spec = spec_for(seed, cat, static_cast<int>(seed - 1));
      const std::string tag = std::string(category_name(cat)) + " seed " + std::to_string(seed) + ": ";
      try {
        const Item it = generate_item(spec);
        const ValidationReport r = validate_item(it);
        c.expect(r.clean(), tag + (r.clean() ? "" : r.findings.front().code));
        c.expect(pick_correct_choice(it) == it.correct, tag + "oracle disagrees with key");
        ++items;
      } catch (const Error& e) {
        c.expect(false, tag + e.what());
      }
    }
  }
  const std::string a = serialize_bank(generate_bank(42));
  c.expect(a == serialize_bank(generate_bank(42)), "regeneration differs");
  const ItemBank demo = parse_bank(a);
  c.expect(demo.items.size() == 21, "demo bank is not 7/7/7");
  for (std::size_t i = 0; i < demo.items.size(); ++i) {
    c.expect(demo.items[i].category == kAllCategories[i / 7], demo.items[i].id + " in the wrong category");
  }
  c.expect(validate_bank(demo).clean(), "demo bank has findings");
  std::ifstream shipped(std::string(ACE_DATA_DIR) + "/demo_bank.json");
  const std::string on_disk{std::istreambuf_iterator<char>(shipped), {}};
  c.expect(on_disk == a, "data/demo_bank.json differs from a fresh seed-42 bank");
  report(4, "generator integrity", c, seconds_since(t0), std::to_string(items) + " items + 7/7/7 demo bank");
}

// --- 5 ------------------------------------------------------------------

ResponseMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<std::string> persons, items;
  std::vector<std::uint8_t> cells;
  for (std::size_t i = 0; i < rows.size(); ++i) persons.push_back("p" + std::to_string(i));
  for (std::size_t j = 0; j < rows.front().size(); ++j) items.push_back("i" + std::to_string(j));
  for (const auto& r : rows) {
    for (int v : r) cells.push_back(static_cast<std::uint8_t>(v));
  }
  return ResponseMatrix(persons, items, cells);
}

void alpha_checks() {
  const auto t0 = Clock::now();
  Check c;
  const double dup = cronbach_alpha(from_rows({{1, 1, 1}, {0, 0, 0}, {1, 1, 1}, {0, 0, 0}, {1, 1, 1}}));
  c.expect(std::abs(dup - 1.0) <= 1e-12, "duplicated columns: " + fmt("%.17g", dup));
  // Item variances 1/4, 1/3, 1/4 and total variance 5/3 give 3/2 * (1 - 0.5).
  const double hand = cronbach_alpha(from_rows({{1, 1, 1}, {1, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  c.expect(std::abs(hand - 0.75) <= 1e-12, "4x3 fixture: " + fmt("%.17g", hand));

  Rng rng(55);
  int done = 0;
  while (done < 50) {
    const int n = rng.between(6, 40), k = rng.between(3, 12);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(k)));
    for (auto& r : rows) {
      for (int& v : r) v = rng.chance(0.6) ? 1 : 0;
    }
    double base;
    try {
      base = cronbach_alpha(from_rows(rows));
    } catch (const UndefinedStatistic&) {
      continue;
    }
    rng.shuffle(rows);
    std::vector<std::size_t> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (auto& r : rows) {
      std::vector<int> copy(r);
      for (std::size_t j = 0; j < order.size(); ++j) r[j] = copy[order[j]];
    }
    const double permuted = cronbach_alpha(from_rows(rows));
    c.expect(std::abs(permuted - base) <= 1e-12, "permutation changed alpha by " + fmt("%.3g", permuted - base));
    ++done;
  }
  report(5, "cronbach alpha", c, seconds_since(t0), "dup=" + fmt("%.15f", dup) + " fixture=" + fmt("%.15f", hand));
}

// --- 6 ------------------------------------------------------------------

void rasch_recovery() {
  const auto t0 = Clock::now();
  Check c;
  Rng rng(20261018);
  std::vector<double> theta(500);
  for (double& t : theta) t = rng.normal();
  std::vector<double> b(21);
  for (int j = 0; j < 21; ++j) b[static_cast<std::size_t>(j)] = -2.0 + 4.0 * j / 20.0;
  const ResponseMatrix m = simulate_rasch(theta, b, 20261018);
  const RaschFit fit = rasch_fit(m);

  std::map<std::string, double> est;
  for (std::size_t j = 0; j < fit.item_ids.size(); ++j) est[fit.item_ids[j]] = fit.b[j];
  std::vector<double> truth, hat;
  for (std::size_t j = 0; j < m.items(); ++j) {
    if (!est.contains(m.item_ids()[j])) continue;
    truth.push_back(b[j]);
    hat.push_back(est.at(m.item_ids()[j]));
  }
  const double r = pearson(hat, truth).r;
  double se = 0;
  for (std::size_t j = 0; j < hat.size(); ++j) se += (hat[j] - truth[j]) * (hat[j] - truth[j]);
  const double rmse = std::sqrt(se / static_cast<double>(hat.size()));

  // Score matching recomputed here from the reported estimates.
  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < m.persons(); ++i) row_of[m.person_ids()[i]] = i;
  std::vector<std::size_t> col(fit.item_ids.size());
  for (std::size_t j = 0; j < fit.item_ids.size(); ++j) {
    col[j] = static_cast<std::size_t>(std::find(m.item_ids().begin(), m.item_ids().end(), fit.item_ids[j]) -
                                      m.item_ids().begin());
  }
  double residual = 0;
  std::vector<double> item_gap(fit.item_ids.size(), 0.0);
  for (std::size_t p = 0; p < fit.person_ids.size(); ++p) {
    const std::size_t row = row_of.at(fit.person_ids[p]);
    double gap = 0;
    for (std::size_t j = 0; j < fit.item_ids.size(); ++j) {
      const double d = m.at(row, col[j]) - 1.0 / (1.0 + std::exp(fit.b[j] - fit.theta[p]));
      gap += d;
      item_gap[j] += d;
    }
    residual = std::max(residual, std::abs(gap));
  }
  for (double g : item_gap) residual = std::max(residual, std::abs(g));

  c.expect(r >= 0.95, "corr " + fmt("%.4f", r) + " < 0.95");
  c.expect(rmse <= 0.3, "RMSE " + fmt("%.4f", rmse) + " > 0.3");
  c.expect(residual < 1e-4, "score residual " + fmt("%.3g", residual));
  c.expect(fit.converged && fit.iterations <= 100, "did not converge within 100 sweeps");
  c.expect(fit.person_reliability >= 0.70 && fit.person_reliability <= 0.90,
           "person reliability " + fmt("%.4f", fit.person_reliability));
  const double secs = seconds_since(t0);
  c.expect(secs < 10.0, "runtime " + fmt("%.2f", secs) + "s");
  report(6, "rasch recovery", c, secs,
         "r=" + fmt("%.4f", r) + " rmse=" + fmt("%.4f", rmse) + " resid=" + fmt("%.1e", residual) +
             " sweeps=" + std::to_string(fit.iterations) + " rel=" + fmt("%.3f", fit.person_reliability));
}

// --- 7 ------------------------------------------------------------------

void correlation_fixtures() {
  const auto t0 = Clock::now();
  Check c;
  const std::vector<double> x{2.1, 3.4, 1.9, 5.6, 4.4, 3.3, 2.8, 6.1};
  std::vector<double> neg;
  for (double v : x) neg.push_back(-v);
  c.expect(pearson(x, x).r == 1.0, "pearson(x,x) = " + fmt("%.17g", pearson(x, x).r));
  c.expect(pearson(x, neg).r == -1.0, "pearson(x,-x) = " + fmt("%.17g", pearson(x, neg).r));

  // r = 6 / sqrt(60) by hand; p from the t distribution with 3 df.
  const CorrelationResult f = pearson({1, 2, 3, 4, 5}, {2, 4, 5, 4, 5});
  c.expect(std::abs(f.r - 6.0 / std::sqrt(60.0)) < 1e-9, "fixture r " + fmt("%.12f", f.r));
  c.expect(std::abs(f.p_two_sided - 0.1240270626575546) < 1e-6, "fixture p " + fmt("%.12f", f.p_two_sided));

  const std::vector<double> a{3.1, 2.4, 4.8, 3.9, 5.2, 2.2};
  const std::vector<double> b{1.8, 2.9, 2.1, 1.1, 2.6, 1.5, 2.0, 2.4, 1.7};
  const WelchResult ab = welch_t(a, b), ba = welch_t(b, a);
  c.expect(ab.t == -ba.t && ab.df == ba.df && ab.p_two_sided == ba.p_two_sided, "welch not antisymmetric");
  c.expect(std::abs(ab.t - 2.934730605451213) < 1e-9, "welch t " + fmt("%.12f", ab.t));
  const WelchResult same = welch_t(a, a);
  c.expect(same.t == 0.0 && same.p_two_sided == 1.0, "identical samples: t=" + fmt("%g", same.t));
  report(7, "correlation / t-test fixtures", c, seconds_since(t0), "r=" + fmt("%.12f", f.r) + " p=" + fmt("%.10f", f.p_two_sided));
}

// --- 8 ------------------------------------------------------------------

void end_to_end() {
  const auto t0 = Clock::now();
  Check c;
  const ItemBank bank = parse_bank(serialize_bank(generate_bank(42)));
  c.expect(validate_bank(bank).clean(), "generated bank has findings");
  const ResponseTable responses = parse_responses(format_responses(simulate_responses(bank, {42, 371})));
  const std::string text = analyze(responses, bank, {"", ""}).dump(2);
  const ordered_json doc = ordered_json::parse(text);

  const std::vector<std::string> problems = validate_report_schema(doc);
  c.expect(problems.empty(), problems.empty() ? "" : "schema: " + problems.front());

  const auto& theta = doc["icc"]["theta"];
  const auto& curves = doc["icc"]["curves"];
  std::size_t easy = 0, hard = 0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    if (curves[i]["b"].get<double>() < curves[easy]["b"].get<double>()) easy = i;
    if (curves[i]["b"].get<double>() > curves[hard]["b"].get<double>()) hard = i;
    const auto& p = curves[i]["p"];
    c.expect(p.size() == theta.size(), "curve length");
    for (std::size_t k = 1; k < p.size(); ++k) {
      c.expect(p[k].get<double>() > p[k - 1].get<double>(), curves[i]["id"].get<std::string>() + " not monotone");
    }
  }
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t k = 0; k < theta.size(); ++k) {
      const double v = curves[i]["p"][k].get<double>();
      c.expect(v <= curves[easy]["p"][k].get<double>() && v >= curves[hard]["p"][k].get<double>(),
               curves[i]["id"].get<std::string>() + " escapes the easiest/hardest envelope");
    }
  }

  int binned = 0;
  for (const auto& bin : doc["wright_map"]["bins"]) binned += bin["persons"].get<int>();
  const int n = doc["wright_map"]["n_persons"].get<int>();
  c.expect(binned == n, "wright map bins hold " + std::to_string(binned) + " of " + std::to_string(n));
  c.expect(n == static_cast<int>(doc["rasch"]["persons"].size()), "wright map n differs from fitted persons");

  const double secs = seconds_since(t0);
  c.expect(secs < 30.0, "runtime " + fmt("%.2f", secs) + "s");
  report(8, "end-to-end pipeline", c, secs,
         "easiest " + curves[easy]["id"].get<std::string>() + ", hardest " + curves[hard]["id"].get<std::string>() +
             ", alpha=" + fmt("%.3f", doc["descriptive"]["alpha_overall"].get<double>()));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {golden_suite,   semantics_properties, enumeration,
                                                       generator_integrity, alpha_checks, rasch_recovery,
                                                       correlation_fixtures, end_to_end};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      std::printf("FAIL  criterion %zu  unexpected exception: %s\n", i + 1, e.what());
      ++g_failed;
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - g_failed, criteria.size());
  return g_failed == 0 ? 0 : 1;
}
