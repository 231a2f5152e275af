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

// Descriptive statistics and the "ace-report/1" analysis document.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ace/bank_io.hpp"
#include "ace/item.hpp"
#include "ace/psychometrics.hpp"
#include "ace/responses.hpp"

namespace ace {

inline constexpr std::string_view kReportSchema = "ace-report/1";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct ItemRate {
  std::string id;
  double rate;
};

struct GroupMean {
  std::string group;
  int n;
  double mean;
};

struct CategorySummary {
  BloomCategory category;
  std::vector<std::string> items;
  double mean_subscore = 0.0;
  std::optional<double> alpha;  // absent when undefined or fewer than 2 items
};

struct ReliabilityReport {
  int persons = 0;
  int items = 0;
  double mean_score = 0.0;
  double sd_score = 0.0;
  std::vector<int> score_distribution;  // index = total score, 0..items
  std::vector<ItemRate> item_success_rates;
  std::vector<GroupMean> grade_means;
  std::vector<GroupMean> after_school_means;
  std::vector<CategorySummary> categories;
  double alpha_overall = 0.0;
  std::optional<CorrelationResult> total_vs_external;
  /// Fields that were omitted and why.
  std::vector<std::string> notes;
};

/// Throws ContractViolation when a response column is not an item of
/// `bank`, and UndefinedStatistic when overall alpha is undefined.
/// Missing metadata columns only drop the fields that need them.
ReliabilityReport descriptive_report(const ResponseTable& table, const ItemBank& bank);

struct AnalysisInputs {
  std::string responses_sha256;
  std::string bank_sha256;
};

/// Full analysis: descriptive report, Rasch fit (JML), ICC and Wright-map
/// point arrays, total/category correlations and the after-school Welch test.
ordered_json analyze(const ResponseTable& table, const ItemBank& bank, const AnalysisInputs& inputs,
                     const RaschOptions& rasch = {});

/// Structural check of an analysis document; empty when it conforms.
std::vector<std::string> validate_report_schema(const ordered_json& doc);

}  // namespace ace
