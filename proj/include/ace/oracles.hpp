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

// Answer oracles: solution checks, exhaustive design enumeration and program
// equivalence over a family of tasks. Everything here is brute force over
// the interpreter; no result depends on evaluation order.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ace/interpreter.hpp"
#include "ace/item.hpp"

namespace ace {

/// Enumeration requests above this many candidate wall subsets are refused.
inline constexpr std::uint64_t kMaxWallSubsets = 1'000'000;
inline constexpr int kMaxWallBudget = 4;

bool solves(const Grid& g, const AvatarState& start, const Program& p,
            int step_limit = kDefaultStepLimit);

using StartSet = std::set<AvatarState>;

/// Every (free cell, direction) start from which `p` reaches the goal.
/// Starts on the goal cell itself are never included.
StartSet enumerate_avatar_starts(const Grid& g, const Program& p);

/// Number of distinct cells in `starts`, for the position-only counting convention.
int distinct_positions(const StartSet& starts);

/// Free cells that, used as the goal, make `p` solve the task from `start`.
/// Any goal already on `g` is ignored; the start cell is never a candidate.
std::set<Position> enumerate_goal_cells(const Grid& g, const AvatarState& start,
                                        const Program& p);

/// Cells eligible to receive an extra wall: free, not the goal, not the start.
std::vector<Position> wall_candidates(const Grid& g, const AvatarState& start);

/// Number of wall subsets that count_wall_configurations would examine.
std::uint64_t wall_subset_count(std::size_t candidates, int budget);

/// Number of sets of at most `budget` extra walls under which `p` still
/// solves the task. Throws BudgetError when budget is outside [0, 4] or the
/// subset count exceeds kMaxWallSubsets.
std::uint64_t count_wall_configurations(const Grid& g, const AvatarState& start,
                                        const Program& p, int budget);

enum class EquivalenceMode { Trace, Outcome };

struct Task {
  Grid grid;
  AvatarState start;
};

struct EquivalenceVerdict {
  EquivalenceMode mode = EquivalenceMode::Trace;
  bool equal = true;
  /// First task of the family on which the programs behave differently.
  std::optional<Task> witness;
};

/// Trace mode compares the visited-cell sequence and the outcome kind;
/// Outcome mode compares the outcome kind only. Throws ContractViolation on an
/// empty family.
EquivalenceVerdict equivalent(const Program& a, const Program& b, const std::vector<Task>& family,
                              EquivalenceMode mode);

/// Judges choice contents against an item's payload. The expensive part of
/// the answer (enumeration, final cell, counts) is derived once on
/// construction. Throws ContractViolation when the payload is malformed.
class ChoiceOracle {
 public:
  explicit ChoiceOracle(const Item& item);

  /// False for FreeText items.
  bool machine_checkable() const { return kind_ != ItemKind::FreeText; }
  bool accepts(const ChoiceContent& content) const;

 private:
  ItemKind kind_;
  std::vector<Task> family_;
  std::optional<Program> reference_;
  std::optional<Position> end_cell_;
  std::set<Position> goal_cells_;
  long long count_ = 0;
};

/// The label the oracle derives for a machine-checkable item, or nullopt for
/// FreeText items. Throws ItemIntegrityError when no choice or more than one
/// choice satisfies the oracle, and ContractViolation when the payload is
/// malformed.
std::optional<Label> pick_correct_choice(const Item& item);

}  // namespace ace
