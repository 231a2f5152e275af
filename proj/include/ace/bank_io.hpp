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

// Item-bank JSON ("ace-bank/1") and item validation.
//
// Layout:
//   { "schema": "ace-bank/1", "name": ..., "version": ...,
//     "items": [ { "id", "category", "kind", "stem",
//                  "grids": [<ASCII grid>], "start": {"cell": "b2", "dir": "East"},
//                  "programs": [<DSL text>], "wall_budget": 2,
//                  "choices": [ {"label": "A", "type": "program|cell|count|grid|text",
//                                "value": ...} ],
//                  "correct": "C" } ] }

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ace/item.hpp"
#include "json.hpp"

namespace ace {

inline constexpr std::string_view kBankSchema = "ace-bank/1";

using ordered_json = nlohmann::ordered_json;

ordered_json bank_to_json(const ItemBank& bank);
/// Throws SchemaError naming the offending path (e.g. "items[2].choices").
ItemBank bank_from_json(const nlohmann::ordered_json& doc);

/// Canonical serialization: two-space indented JSON with a trailing newline.
std::string serialize_bank(const ItemBank& bank);
/// Throws ParseError for text that is not JSON and SchemaError for schema violations.
ItemBank parse_bank(std::string_view text);

/// Reads and schema-validates a bank file.
ItemBank load_bank(const std::filesystem::path& path);
/// Writes through a temporary file and an atomic rename.
void save_bank(const ItemBank& bank, const std::filesystem::path& path);

struct Finding {
  std::string item_id;
  std::string code;  // "structure", "answer-key mismatch", "multiple correct", "no correct", "oracle error"
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool clean() const { return findings.empty(); }
};

/// Structural checks, then (for machine-checkable kinds) agreement between
/// the oracle's label and the stored one.
ValidationReport validate_item(const Item& item);
/// validate_item over every item plus duplicate-id detection.
ValidationReport validate_bank(const ItemBank& bank);

}  // namespace ace
