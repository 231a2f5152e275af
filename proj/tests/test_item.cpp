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

#include <filesystem>

#include "ace/bank_io.hpp"
#include "ace/error.hpp"
#include "ace/generator.hpp"
#include "ace/io.hpp"
#include "doctest.h"

using namespace ace;

namespace {

Item trace_item() {
  const GridText gt = parse_grid("....\n...G\n....");
  Item it;
  it.id = "Q05";
  it.category = BloomCategory::ApplyingAnalyzing;
  it.kind = ItemKind::TraceOutcome;
  it.stem = "Where does the avatar stop?";
  it.grids = {gt.grid};
  it.start = AvatarState{{0, 0}, Direction::East};
  it.programs = {parse_program("move move turn_right move")};
  it.choices = {{Label::A, Position{2, 0}}, {Label::B, Position{2, 1}}, {Label::C, Position{3, 1}},
                {Label::D, Position{1, 1}}};
  it.correct = Label::B;
  return it;
}

ItemBank small_bank() {
  ItemBank b{"unit", "1", {trace_item()}};
  Item wall = trace_item();
  wall.id = "Q18";
  wall.category = BloomCategory::EvaluatingCreating;
  wall.kind = ItemKind::WallDesignCount;
  wall.stem = "How many ways can you add at most one wall so the code still works?";
  wall.grids = {parse_grid(">..G\n....").grid};
  wall.programs = {parse_program("move move move")};
  wall.wall_budget = 1;
  wall.choices = {{Label::A, 3}, {Label::B, 4}, {Label::C, 5}, {Label::D, 6}};
  wall.correct = Label::C;
  b.items.push_back(wall);
  return b;
}

}  // namespace

TEST_CASE("published answer key") {
  const auto& key = answer_key_reference();
  CHECK(key.size() == 21);
  CHECK(key.at("Q01") == Label::C);
  CHECK(key.at("Q02") == Label::A);
  CHECK(key.at("Q17") == Label::D);
  CHECK(key.at("Q21") == Label::A);
  const std::string all = "CADDBCBCBDDBCBDCDCBBA";
  for (int i = 1; i <= 21; ++i) CHECK(label_char(key.at(item_id(i))) == all[static_cast<std::size_t>(i - 1)]);
  CHECK(reference_category("Q07") == BloomCategory::ApplyingAnalyzing);
  CHECK(reference_category("Q08") == BloomCategory::AnalyzingEvaluating);
  CHECK(reference_category("Q15") == BloomCategory::EvaluatingCreating);
  CHECK_FALSE(reference_category("Q22").has_value());
  CHECK(reference_kind("Q17") == ItemKind::AvatarPlacementCount);
}

TEST_CASE("categories and kinds") {
  CHECK(category_label(BloomCategory::ApplyingAnalyzing) == "ACE[01-07]");
  CHECK(category_label(BloomCategory::EvaluatingCreating) == "ACE[15-21]");
  CHECK(kind_admissible(BloomCategory::ApplyingAnalyzing, ItemKind::TraceOutcome));
  CHECK_FALSE(kind_admissible(BloomCategory::ApplyingAnalyzing, ItemKind::BugFinding));
  CHECK(kind_admissible(BloomCategory::AnalyzingEvaluating, ItemKind::EquivalenceJudgment));
  CHECK(kind_admissible(BloomCategory::EvaluatingCreating, ItemKind::WallDesignCount));
  CHECK(kind_admissible(BloomCategory::EvaluatingCreating, ItemKind::FreeText));
  for (BloomCategory c : kAllCategories) {
    for (ItemKind k : kinds_for(c)) CHECK(kind_admissible(c, k));
    CHECK(category_from_name(category_name(c)) == c);
  }
}

TEST_CASE("score_response") {
  const Item it = trace_item();
  CHECK(score_response(it, Label::B) == 1);
  CHECK(score_response(it, Label::A) == 0);
  // A full row of answers against the published key totals at most 21.
  int total = 0;
  for (const auto& [id, label] : answer_key_reference()) {
    Item q = it;
    q.id = id;
    q.correct = label;
    total += score_response(q, label);
  }
  CHECK(total == 21);
}

TEST_CASE("structural findings") {
  CHECK(structural_findings(trace_item()).empty());

  Item wrong_cat = trace_item();
  wrong_cat.category = BloomCategory::EvaluatingCreating;
  CHECK_FALSE(structural_findings(wrong_cat).empty());

  Item three = trace_item();
  three.choices.pop_back();
  CHECK_FALSE(structural_findings(three).empty());

  Item dup = trace_item();
  dup.choices[1].content = dup.choices[0].content;
  CHECK_FALSE(structural_findings(dup).empty());

  Item no_program = trace_item();
  no_program.programs.clear();
  CHECK_FALSE(structural_findings(no_program).empty());

  Item on_goal = trace_item();
  on_goal.start = AvatarState{{3, 1}, Direction::East};
  CHECK_FALSE(structural_findings(on_goal).empty());

  Item wrong_type = trace_item();
  wrong_type.choices[0].content = 3;
  CHECK_FALSE(structural_findings(wrong_type).empty());
}

TEST_CASE("validate_item reports oracle disagreement") {
  CHECK(validate_item(trace_item()).clean());

  Item mismatch = trace_item();
  mismatch.correct = Label::A;
  const ValidationReport r = validate_item(mismatch);
  REQUIRE(r.findings.size() == 1);
  CHECK(r.findings[0].code == "answer-key mismatch");

  Item twice = trace_item();
  twice.kind = ItemKind::SolutionFinding;
  twice.choices = {{Label::A, parse_program("move move move turn_right move")},
                   {Label::B, parse_program("move move turn_right move turn_left move")},
                   {Label::C, parse_program("move")},
                   {Label::D, parse_program("turn_left")}};
  twice.programs.clear();
  const ValidationReport r2 = validate_item(twice);
  REQUIRE(r2.findings.size() == 1);
  CHECK(r2.findings[0].code == "multiple correct");

  CHECK(validate_bank(small_bank()).clean());
  ItemBank dups = small_bank();
  dups.items[1].id = "Q05";
  CHECK_FALSE(validate_bank(dups).clean());
}

TEST_CASE("bank JSON round trip") {
  const ItemBank b = small_bank();
  const std::string text = serialize_bank(b);
  const ItemBank back = parse_bank(text);
  CHECK(back == b);
  CHECK(serialize_bank(back) == text);

  const ItemBank gen = generate_bank(7);
  CHECK(parse_bank(serialize_bank(gen)) == gen);

  const auto dir = std::filesystem::temp_directory_path() / "ace_test_item";
  std::filesystem::create_directories(dir);
  save_bank(gen, dir / "bank.json");
  CHECK(load_bank(dir / "bank.json") == gen);
  CHECK_FALSE(std::filesystem::exists(dir / "bank.json.tmp"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("bank schema errors name the offending field") {
  ordered_json doc = bank_to_json(small_bank());

  auto path_of = [](const ordered_json& d) -> std::string {
    try {
      bank_from_json(d);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return "";
  };

  ordered_json missing_choice = doc;
  missing_choice["items"][1]["choices"].erase(3);
  CHECK(path_of(missing_choice) == "$.items[1] (Q18).choices");

  ordered_json bad_program = doc;
  bad_program["items"][0]["programs"][0] = "move jump";
  CHECK(path_of(bad_program) == "$.items[0] (Q05).programs[0]");

  ordered_json bad_value = doc;
  bad_value["items"][1]["choices"][2]["value"] = "five";
  CHECK(path_of(bad_value) == "$.items[1] (Q18).choices[2].value");

  ordered_json dup = doc;
  dup["items"][1]["id"] = "Q05";
  CHECK(path_of(dup) == "$.items[1].id");

  ordered_json wrong_schema = doc;
  wrong_schema["schema"] = "ace-bank/2";
  CHECK(path_of(wrong_schema) == "$.schema");

  ordered_json no_kind = doc;
  no_kind["items"][0].erase("kind");
  CHECK(path_of(no_kind) == "$.items[0] (Q05).kind");

  ordered_json avatar_in_grid = doc;
  avatar_in_grid["items"][0]["grids"][0] = ">...\n...G\n....";
  CHECK(path_of(avatar_in_grid) == "$.items[0] (Q05).grids[0]");

  CHECK_THROWS_AS(parse_bank("{not json"), ParseError);
}
