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

// Seeded synthesis of oracle-verified items.
//
// Every random draw comes from ace::Rng seeded by derive_seed(spec.seed,
// attempt), so an item is a pure function of its GenSpec. A spec gets up to
// kMaxAttempts attempts before GenerationExhausted is thrown.
//
// Difficulty bands: programs with <= 4 blocks are Easy, <= 8 Medium, else
// Hard; for counting kinds the correct count is banded <= 3 / <= 6 / more.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ace/item.hpp"
#include "ace/maze.hpp"
#include "ace/program.hpp"
#include "ace/rng.hpp"

namespace ace {

inline constexpr int kMaxAttempts = 1000;

enum class Difficulty { Easy, Medium, Hard };

std::string_view difficulty_name(Difficulty d);
std::optional<Difficulty> difficulty_from_name(std::string_view name);

Difficulty program_band(int blocks);
Difficulty count_band(long long count);

struct GenSpec {
  std::uint64_t seed = 0;
  BloomCategory category = BloomCategory::ApplyingAnalyzing;
  ItemKind kind = ItemKind::SolutionFinding;
  int width = 5;
  int height = 5;
  Difficulty difficulty = Difficulty::Easy;
};

/// Empty when the spec can be generated; otherwise the reason it cannot.
std::optional<std::string> spec_problem(const GenSpec& spec);

struct GeneratedTask {
  Grid grid;
  AvatarState start;
};

/// Random walls around a guaranteed avatar-to-goal path. Deterministic per
/// seed; throws GenerationExhausted if no layout is found within the retry bound.
GeneratedTask generate_grid(std::uint64_t seed, const GenSpec& spec);

/// Breadth-first shortest path over free cells (both ends included), or
/// nullopt when `to` is unreachable.
std::optional<std::vector<Position>> shortest_path(const Grid& g, Position from, Position to);

/// Turns and moves that walk `path` from `start`; runs of moves become
/// `repeat n { move }` when `compress` allows it (n >= 3 always, n == 2 when
/// compress_pairs is set).
Program path_program(const AvatarState& start, const std::vector<Position>& path,
                     bool compress_pairs);

/// Every program one edit away from `p`: block deletion, turn flip, move to
/// turn, inserted move, adjacent swap, repeat count +-1 and condition change.
/// Duplicates and structurally invalid results are dropped.
std::vector<Program> single_edit_mutants(const Program& p);

/// Three contents distinct from `correct` and from each other that the
/// item's oracle rejects. `core` carries the item's payload (grids, start,
/// programs); its choices are ignored. Throws GenerationExhausted.
std::vector<ChoiceContent> generate_distractors(const Item& core, const ChoiceContent& correct,
                                                Rng& rng);

/// Throws ContractViolation for an invalid spec and GenerationExhausted when
/// the retry bound is hit.
Item generate_item(const GenSpec& spec, const std::string& id = "Q01");

/// Spec used for the index-th item (0-based) of a category in generated
/// banks: kinds rotate through the category, difficulty cycles, and grid size
/// grows with difficulty.
GenSpec spec_for(std::uint64_t seed, BloomCategory category, int index);

struct BankShape {
  int applying_analyzing = 7;
  int analyzing_evaluating = 7;
  int evaluating_creating = 7;
};

ItemBank generate_bank(std::uint64_t seed, BankShape shape = {});

}  // namespace ace
