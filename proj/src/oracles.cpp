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

#include "ace/oracles.hpp"

#include <algorithm>
#include <functional>

#include "ace/error.hpp"

namespace ace {

bool solves(const Grid& g, const AvatarState& start, const Program& p, int step_limit) {
  return execute(g, start, p, step_limit).outcome.kind == OutcomeKind::GoalReached;
}

StartSet enumerate_avatar_starts(const Grid& g, const Program& p) {
  StartSet out;
  for (const Position& cell : g.free_cells()) {
    if (g.goal() && cell == *g.goal()) continue;
    for (Direction d : kAllDirections) {
      const AvatarState s{cell, d};
      if (solves(g, s, p)) out.insert(s);
    }
  }
  return out;
}

int distinct_positions(const StartSet& starts) {
  std::set<Position> cells;
  for (const AvatarState& s : starts) cells.insert(s.pos);
  return static_cast<int>(cells.size());
}

std::set<Position> enumerate_goal_cells(const Grid& g, const AvatarState& start, const Program& p) {
  if (!g.valid_start(start)) throw ContractViolation("avatar start is not a free cell");
  Grid probe = g;
  std::set<Position> out;
  for (const Position& cell : g.free_cells()) {
    if (cell == start.pos) continue;
    probe.set_goal(cell);
    if (solves(probe, start, p)) out.insert(cell);
  }
  return out;
}

std::vector<Position> wall_candidates(const Grid& g, const AvatarState& start) {
  std::vector<Position> out;
  for (const Position& cell : g.free_cells()) {
    if (cell == start.pos || (g.goal() && cell == *g.goal())) continue;
    out.push_back(cell);
  }
  return out;
}

std::uint64_t wall_subset_count(std::size_t candidates, int budget) {
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(candidates, k)
  for (int k = 0; k <= budget; ++k) {
    if (static_cast<std::size_t>(k) > candidates) break;
    if (k > 0) binom = binom * (candidates - static_cast<std::size_t>(k) + 1) / static_cast<std::uint64_t>(k);
    total += binom;
  }
  return total;
}

std::uint64_t count_wall_configurations(const Grid& g, const AvatarState& start, const Program& p,
                                        int budget) {
  if (budget < 0 || budget > kMaxWallBudget) {
    throw BudgetError("wall budget " + std::to_string(budget) + " outside [0,4]");
  }
  if (!g.valid_start(start)) throw ContractViolation("avatar start is not a free cell");
  const std::vector<Position> cells = wall_candidates(g, start);
  const std::uint64_t subsets = wall_subset_count(cells.size(), budget);
  if (subsets > kMaxWallSubsets) {
    throw BudgetError("wall budget " + std::to_string(budget) + " on " +
                      std::to_string(cells.size()) + " candidate cells gives " +
                      std::to_string(subsets) + " subsets (limit 1000000)");
  }

  Grid work = g;
  std::uint64_t count = 0;
  // Subsets in lexicographic order of candidate index; each recursion level adds one wall.
  std::function<void(std::size_t, int)> extend = [&](std::size_t from, int remaining) {
    if (solves(work, start, p)) ++count;
    if (remaining == 0) return;
    for (std::size_t i = from; i < cells.size(); ++i) {
      work.set(cells[i], CellKind::Wall);
      extend(i + 1, remaining - 1);
      work.set(cells[i], CellKind::Free);
    }
  };
  extend(0, budget);
  return count;
}

namespace {

bool same_behaviour(const Task& t, const Program& a, const Program& b, EquivalenceMode mode) {
  const Execution ea = execute(t.grid, t.start, a);
  const Execution eb = execute(t.grid, t.start, b);
  if (ea.outcome.kind != eb.outcome.kind) return false;
  if (mode == EquivalenceMode::Outcome) return true;
  return visited_cells(t.start, ea.trace) == visited_cells(t.start, eb.trace);
}

}  // namespace

EquivalenceVerdict equivalent(const Program& a, const Program& b, const std::vector<Task>& family,
                              EquivalenceMode mode) {
  if (family.empty()) throw ContractViolation("equivalence needs a non-empty task family");
  EquivalenceVerdict v{mode, true, std::nullopt};
  for (const Task& t : family) {
    if (!same_behaviour(t, a, b, mode)) {
      v.equal = false;
      v.witness = t;
      break;
    }
  }
  return v;
}

namespace {

std::vector<Task> item_family(const Item& item) {
  if (item.grids.empty() || !item.start) {
    throw ContractViolation("item " + item.id + " lacks a grid or avatar start");
  }
  std::vector<Task> family;
  for (const Grid& g : item.grids) family.push_back({g, *item.start});
  return family;
}

const Program& first_program(const Item& item) {
  if (item.programs.empty()) throw ContractViolation("item " + item.id + " lacks a program");
  return item.programs.front();
}

}  // namespace

ChoiceOracle::ChoiceOracle(const Item& item) : kind_(item.kind) {
  switch (kind_) {
    case ItemKind::SolutionFinding:
    case ItemKind::BugFinding:
      family_ = item_family(item);
      break;
    case ItemKind::TraceOutcome: {
      family_ = item_family(item);
      const Task& t = family_.front();
      end_cell_ = execute(t.grid, t.start, first_program(item)).outcome.final_state.pos;
      break;
    }
    case ItemKind::EquivalenceJudgment:
      family_ = item_family(item);
      reference_ = first_program(item);
      break;
    case ItemKind::AvatarPlacementCount:
      if (item.grids.empty()) throw ContractViolation("item " + item.id + " lacks a grid");
      count_ = static_cast<long long>(
          enumerate_avatar_starts(item.grids.front(), first_program(item)).size());
      break;
    case ItemKind::GoalPlacementDesign: {
      family_ = item_family(item);
      const Task& t = family_.front();
      goal_cells_ = enumerate_goal_cells(t.grid, t.start, first_program(item));
      break;
    }
    case ItemKind::WallDesignCount: {
      family_ = item_family(item);
      if (!item.wall_budget) throw ContractViolation("item " + item.id + " lacks wall_budget");
      const Task& t = family_.front();
      count_ = static_cast<long long>(
          count_wall_configurations(t.grid, t.start, first_program(item), *item.wall_budget));
      break;
    }
    case ItemKind::FreeText:
      break;
  }
}

bool ChoiceOracle::accepts(const ChoiceContent& content) const {
  switch (kind_) {
    case ItemKind::SolutionFinding:
    case ItemKind::BugFinding: {
      const Program* p = std::get_if<Program>(&content);
      return p && std::all_of(family_.begin(), family_.end(), [&](const Task& t) {
               return solves(t.grid, t.start, *p);
             });
    }
    case ItemKind::TraceOutcome:
    case ItemKind::GoalPlacementDesign: {
      const Position* c = std::get_if<Position>(&content);
      if (!c) return false;
      return kind_ == ItemKind::TraceOutcome ? *c == *end_cell_ : goal_cells_.contains(*c);
    }
    case ItemKind::EquivalenceJudgment: {
      const Program* p = std::get_if<Program>(&content);
      return p && equivalent(*reference_, *p, family_, EquivalenceMode::Trace).equal;
    }
    case ItemKind::AvatarPlacementCount:
    case ItemKind::WallDesignCount: {
      const int* n = std::get_if<int>(&content);
      return n && *n == count_;
    }
    case ItemKind::FreeText:
      return false;
  }
  return false;
}

std::optional<Label> pick_correct_choice(const Item& item) {
  const ChoiceOracle oracle(item);
  if (!oracle.machine_checkable()) return std::nullopt;
  std::vector<Label> hits;
  for (const Choice& c : item.choices) {
    if (oracle.accepts(c.content)) hits.push_back(c.label);
  }
  if (hits.size() != 1) {
    throw ItemIntegrityError("item " + item.id + ": " + std::to_string(hits.size()) +
                                 " choices satisfy the oracle",
                             static_cast<int>(hits.size()));
  }
  return hits.front();
}

}  // namespace ace
