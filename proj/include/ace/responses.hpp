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

// Response CSV:
//
//   student_id,grade,age,after_school_programming,external_score,Q01,...,Qnn
//
// student_id must be the first column. The four metadata columns are
// optional and may appear in any order; every other column is an item.
// Metadata cells may be empty; item cells must be 0 or 1.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ace/item.hpp"
#include "ace/psychometrics.hpp"

namespace ace {

inline constexpr std::array<std::string_view, 4> kMetaColumns = {
    "grade", "age", "after_school_programming", "external_score"};

struct PersonMeta {
  std::optional<int> grade;
  std::optional<double> age;
  std::optional<bool> after_school;
  std::optional<double> external_score;
};

struct ResponseTable {
  ResponseMatrix matrix;
  std::vector<PersonMeta> meta;           // one per matrix row
  std::vector<std::string> meta_columns;  // optional columns present, header order

  bool has_column(std::string_view name) const;
};

/// Throws ParseError (1-based line/column) for a malformed header, a missing
/// or non-0/1 item cell or an unreadable metadata value, and
/// ContractViolation when the matrix would be smaller than 2x2.
ResponseTable parse_responses(std::string_view csv);
ResponseTable load_responses(const std::filesystem::path& path);
std::string format_responses(const ResponseTable& table);

struct SimulationOptions {
  std::uint64_t seed = 1;
  int persons = 371;
};

/// Difficulties used when simulating answers to `bank`: a per-category
/// offset (later categories harder) plus an even spread within the category.
std::vector<double> simulation_difficulties(const ItemBank& bank);

/// Synthetic cohort answering `bank` under the Rasch model. Grades 3-7 are
/// drawn with weights 51/34/114/81/91, ability is Normal(0.3 * (grade - 5), 1)
/// plus 0.3 for after-school programming (probability 0.2), and
/// external_score is a noisy 0-20 score that rises with ability.
ResponseTable simulate_responses(const ItemBank& bank, const SimulationOptions& opts);

}  // namespace ace
