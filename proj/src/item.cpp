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

#include "ace/item.hpp"

#include <cstdio>
#include <set>

namespace ace {

std::string_view category_name(BloomCategory c) {
  switch (c) {
    case BloomCategory::ApplyingAnalyzing: return "ApplyingAnalyzing";
    case BloomCategory::AnalyzingEvaluating: return "AnalyzingEvaluating";
    case BloomCategory::EvaluatingCreating: return "EvaluatingCreating";
  }
  return "?";
}

std::string_view category_label(BloomCategory c) {
  switch (c) {
    case BloomCategory::ApplyingAnalyzing: return "ACE[01-07]";
    case BloomCategory::AnalyzingEvaluating: return "ACE[08-14]";
    case BloomCategory::EvaluatingCreating: return "ACE[15-21]";
  }
  return "?";
}

std::optional<BloomCategory> category_from_name(std::string_view name) {
  for (BloomCategory c : kAllCategories) {
    if (category_name(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

constexpr std::array<ItemKind, 8> kAllKinds = {
    ItemKind::SolutionFinding,      ItemKind::TraceOutcome,
    ItemKind::BugFinding,           ItemKind::EquivalenceJudgment,
    ItemKind::AvatarPlacementCount, ItemKind::GoalPlacementDesign,
    ItemKind::WallDesignCount,      ItemKind::FreeText};

}  // namespace

std::string_view kind_name(ItemKind k) {
  switch (k) {
    case ItemKind::SolutionFinding: return "SolutionFinding";
    case ItemKind::TraceOutcome: return "TraceOutcome";
    case ItemKind::BugFinding: return "BugFinding";
    case ItemKind::EquivalenceJudgment: return "EquivalenceJudgment";
    case ItemKind::AvatarPlacementCount: return "AvatarPlacementCount";
    case ItemKind::GoalPlacementDesign: return "GoalPlacementDesign";
    case ItemKind::WallDesignCount: return "WallDesignCount";
    case ItemKind::FreeText: return "FreeText";
  }
  return "?";
}

std::optional<ItemKind> kind_from_name(std::string_view name) {
  for (ItemKind k : kAllKinds) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<ItemKind> kinds_for(BloomCategory c) {
  switch (c) {
    case BloomCategory::ApplyingAnalyzing:
      return {ItemKind::SolutionFinding, ItemKind::TraceOutcome};
    case BloomCategory::AnalyzingEvaluating:
      return {ItemKind::BugFinding, ItemKind::EquivalenceJudgment};
    case BloomCategory::EvaluatingCreating:
      return {ItemKind::AvatarPlacementCount, ItemKind::GoalPlacementDesign,
              ItemKind::WallDesignCount};
  }
  return {};
}

bool kind_admissible(BloomCategory c, ItemKind k) {
  if (k == ItemKind::FreeText) return true;
  for (ItemKind allowed : kinds_for(c)) {
    if (allowed == k) return true;
  }
  return false;
}

char label_char(Label l) { return static_cast<char>('A' + static_cast<int>(l)); }

std::optional<Label> label_from_char(char c) {
  if (c < 'A' || c > 'D') return std::nullopt;
  return static_cast<Label>(c - 'A');
}

const Choice* Item::choice(Label l) const {
  for (const Choice& c : choices) {
    if (c.label == l) return &c;
  }
  return nullptr;
}

const Item* ItemBank::find(std::string_view id) const {
  for (const Item& it : items) {
    if (it.id == id) return &it;
  }
  return nullptr;
}

namespace {

enum class Payload { Program, Cell, Count, Any };

struct Requirements {
  bool grid = true;
  bool goal = true;
  bool start = true;
  bool program = true;
  Payload choices = Payload::Program;
};

Requirements requirements_for(ItemKind k) {
  switch (k) {
    case ItemKind::SolutionFinding: return {true, true, true, false, Payload::Program};
    case ItemKind::TraceOutcome: return {true, true, true, true, Payload::Cell};
    case ItemKind::BugFinding: return {true, true, true, true, Payload::Program};
    case ItemKind::EquivalenceJudgment: return {true, true, true, true, Payload::Program};
    case ItemKind::AvatarPlacementCount: return {true, true, false, true, Payload::Count};
    case ItemKind::GoalPlacementDesign: return {true, false, true, true, Payload::Cell};
    case ItemKind::WallDesignCount: return {true, true, true, true, Payload::Count};
    case ItemKind::FreeText: return {false, false, false, false, Payload::Any};
  }
  return {};
}

bool payload_matches(Payload want, const ChoiceContent& c) {
  switch (want) {
    case Payload::Program: return std::holds_alternative<Program>(c);
    case Payload::Cell: return std::holds_alternative<Position>(c);
    case Payload::Count: return std::holds_alternative<int>(c);
    case Payload::Any: return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> structural_findings(const Item& item) {
  std::vector<std::string> out;
  if (item.id.empty()) out.emplace_back("item id is empty");
  if (!kind_admissible(item.category, item.kind)) {
    out.push_back("kind " + std::string(kind_name(item.kind)) + " not admissible for category " +
                  std::string(category_name(item.category)));
  }

  if (item.choices.size() != 4) {
    out.push_back("expected 4 choices, found " + std::to_string(item.choices.size()));
  }
  std::set<Label> labels;
  for (const Choice& c : item.choices) {
    if (!labels.insert(c.label).second) {
      out.push_back(std::string("duplicate choice label ") + label_char(c.label));
    }
  }
  if (!item.choice(item.correct)) {
    out.push_back(std::string("correct label ") + label_char(item.correct) + " has no choice");
  }
  for (std::size_t i = 0; i < item.choices.size(); ++i) {
    for (std::size_t j = i + 1; j < item.choices.size(); ++j) {
      if (item.choices[i].content == item.choices[j].content) {
        out.push_back(std::string("choices ") + label_char(item.choices[i].label) + " and " +
                      label_char(item.choices[j].label) + " are identical");
      }
    }
  }

  const Requirements req = requirements_for(item.kind);
  if (req.grid) {
    if (item.grids.empty()) out.emplace_back("kind requires a grid");
    for (std::size_t i = 0; i < item.grids.size(); ++i) {
      for (const std::string& p : item.grids[i].check(req.goal)) {
        out.push_back("grids[" + std::to_string(i) + "]: " + p);
      }
    }
  }
  if (req.start) {
    if (!item.start) {
      out.emplace_back("kind requires an avatar start");
    } else {
      for (std::size_t i = 0; i < item.grids.size(); ++i) {
        const Grid& g = item.grids[i];
        if (!g.valid_start(*item.start)) {
          out.push_back("grids[" + std::to_string(i) + "]: avatar start is not a free cell");
        } else if (g.goal() && *g.goal() == item.start->pos) {
          out.push_back("grids[" + std::to_string(i) + "]: avatar starts on the goal");
        }
      }
    }
  }
  if (req.program && item.programs.empty()) out.emplace_back("kind requires a program");
  for (std::size_t i = 0; i < item.programs.size(); ++i) {
    if (auto v = program_violation(item.programs[i])) {
      out.push_back("programs[" + std::to_string(i) + "]: " + *v);
    }
  }
  for (const Choice& c : item.choices) {
    if (!payload_matches(req.choices, c.content)) {
      out.push_back(std::string("choice ") + label_char(c.label) + " has the wrong content type");
    } else if (const auto* p = std::get_if<Program>(&c.content)) {
      if (auto v = program_violation(*p)) {
        out.push_back(std::string("choice ") + label_char(c.label) + ": " + *v);
      }
    } else if (const auto* n = std::get_if<int>(&c.content); n && *n < 0) {
      out.push_back(std::string("choice ") + label_char(c.label) + ": negative count");
    }
  }
  if (item.kind == ItemKind::WallDesignCount) {
    if (!item.wall_budget) {
      out.emplace_back("WallDesignCount requires wall_budget");
    } else if (*item.wall_budget < 0 || *item.wall_budget > 4) {
      out.emplace_back("wall_budget outside [0,4]");
    }
  }
  return out;
}

int score_response(const Item& item, Label chosen) { return chosen == item.correct ? 1 : 0; }

const std::map<std::string, Label>& answer_key_reference() {
  static const std::map<std::string, Label> key = {
      {"Q01", Label::C}, {"Q02", Label::A}, {"Q03", Label::D}, {"Q04", Label::D},
      {"Q05", Label::B}, {"Q06", Label::C}, {"Q07", Label::B}, {"Q08", Label::C},
      {"Q09", Label::B}, {"Q10", Label::D}, {"Q11", Label::D}, {"Q12", Label::B},
      {"Q13", Label::C}, {"Q14", Label::B}, {"Q15", Label::D}, {"Q16", Label::C},
      {"Q17", Label::D}, {"Q18", Label::C}, {"Q19", Label::B}, {"Q20", Label::B},
      {"Q21", Label::A},
  };
  return key;
}

std::optional<BloomCategory> reference_category(std::string_view id) {
  if (!answer_key_reference().contains(std::string(id))) return std::nullopt;
  const int n = std::stoi(std::string(id.substr(1)));
  if (n <= 7) return BloomCategory::ApplyingAnalyzing;
  if (n <= 14) return BloomCategory::AnalyzingEvaluating;
  return BloomCategory::EvaluatingCreating;
}

std::optional<ItemKind> reference_kind(std::string_view id) {
  if (id == "Q17") return ItemKind::AvatarPlacementCount;
  return std::nullopt;
}

std::string item_id(int one_based_index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "Q%02d", one_based_index);
  return buf;
}

}  // namespace ace
