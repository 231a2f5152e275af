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

// Multiple-choice items, item banks and the reference answer key of the
// published 21-item test.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ace/maze.hpp"
#include "ace/program.hpp"

namespace ace {

enum class BloomCategory { ApplyingAnalyzing, AnalyzingEvaluating, EvaluatingCreating };

inline constexpr std::array<BloomCategory, 3> kAllCategories = {
    BloomCategory::ApplyingAnalyzing, BloomCategory::AnalyzingEvaluating,
    BloomCategory::EvaluatingCreating};

std::string_view category_name(BloomCategory c);
/// Short label used in reports: "ACE[01-07]", "ACE[08-14]", "ACE[15-21]".
std::string_view category_label(BloomCategory c);
std::optional<BloomCategory> category_from_name(std::string_view name);

enum class ItemKind {
  SolutionFinding,
  TraceOutcome,
  BugFinding,
  EquivalenceJudgment,
  AvatarPlacementCount,
  GoalPlacementDesign,
  WallDesignCount,
  FreeText,
};

std::string_view kind_name(ItemKind k);
std::optional<ItemKind> kind_from_name(std::string_view name);

/// Whether `k` belongs to `c`. FreeText is admissible everywhere.
bool kind_admissible(BloomCategory c, ItemKind k);
/// The machine-checkable kinds of a category, in a fixed order.
std::vector<ItemKind> kinds_for(BloomCategory c);

enum class Label { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<Label, 4> kAllLabels = {Label::A, Label::B, Label::C, Label::D};

char label_char(Label l);
std::optional<Label> label_from_char(char c);

using ChoiceContent = std::variant<Program, Position, int, Grid, std::string>;

struct Choice {
  Label label = Label::A;
  ChoiceContent content;

  friend bool operator==(const Choice&, const Choice&) = default;
};

struct Item {
  std::string id;
  BloomCategory category = BloomCategory::ApplyingAnalyzing;
  ItemKind kind = ItemKind::FreeText;
  std::string stem;
  std::vector<Grid> grids;
  std::optional<AvatarState> start;
  std::vector<Program> programs;
  std::vector<Choice> choices;
  Label correct = Label::A;
  /// WallDesignCount only: the largest number of extra walls a placement may add.
  std::optional<int> wall_budget;

  const Choice* choice(Label l) const;

  friend bool operator==(const Item&, const Item&) = default;
};

struct ItemBank {
  std::string name;
  std::string version;
  std::vector<Item> items;

  const Item* find(std::string_view id) const;

  friend bool operator==(const ItemBank&, const ItemBank&) = default;
};

/// Structural problems with `item` (payload, choices, admissibility); empty
/// when well formed. Oracle agreement is checked by validate_item.
std::vector<std::string> structural_findings(const Item& item);

/// 1 when `chosen` is the item's correct label, 0 otherwise.
int score_response(const Item& item, Label chosen);

/// Published answer key, "Q01" -> C ... "Q21" -> A.
const std::map<std::string, Label>& answer_key_reference();

/// Category of a reference item id by its position in the 21-item test;
/// nullopt for ids outside Q01..Q21.
std::optional<BloomCategory> reference_category(std::string_view id);

/// Kind of a reference item where the published text identifies it (Q17 asks
/// for all avatar placements); nullopt otherwise.
std::optional<ItemKind> reference_kind(std::string_view id);

/// Item id used by generated banks: 1 -> "Q01".
std::string item_id(int one_based_index);

}  // namespace ace
