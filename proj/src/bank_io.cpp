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

#include "ace/bank_io.hpp"

#include <map>

#include "ace/error.hpp"
#include "ace/io.hpp"
#include "ace/oracles.hpp"

namespace ace {

namespace {

ordered_json start_to_json(const AvatarState& s) {
  ordered_json j;
  j["cell"] = cell_name(s.pos);
  j["dir"] = std::string(direction_name(s.dir));
  return j;
}

ordered_json choice_to_json(const Choice& c) {
  ordered_json j;
  j["label"] = std::string(1, label_char(c.label));
  std::visit(
      [&j](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Program>) {
          j["type"] = "program";
          j["value"] = pretty_print(v);
        } else if constexpr (std::is_same_v<T, Position>) {
          j["type"] = "cell";
          j["value"] = cell_name(v);
        } else if constexpr (std::is_same_v<T, int>) {
          j["type"] = "count";
          j["value"] = v;
        } else if constexpr (std::is_same_v<T, Grid>) {
          j["type"] = "grid";
          j["value"] = format_grid(v);
        } else {
          j["type"] = "text";
          j["value"] = v;
        }
      },
      c.content);
  return j;
}

ordered_json item_to_json(const Item& it) {
  ordered_json j;
  j["id"] = it.id;
  j["category"] = std::string(category_name(it.category));
  j["kind"] = std::string(kind_name(it.kind));
  j["stem"] = it.stem;
  j["grids"] = ordered_json::array();
  for (const Grid& g : it.grids) j["grids"].push_back(format_grid(g));
  if (it.start) j["start"] = start_to_json(*it.start);
  j["programs"] = ordered_json::array();
  for (const Program& p : it.programs) j["programs"].push_back(pretty_print(p));
  if (it.wall_budget) j["wall_budget"] = *it.wall_budget;
  j["choices"] = ordered_json::array();
  for (const Choice& c : it.choices) j["choices"].push_back(choice_to_json(c));
  j["correct"] = std::string(1, label_char(it.correct));
  return j;
}

// Reading ---------------------------------------------------------------

const ordered_json& field(const ordered_json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(path + "." + key, "missing required field");
  return *it;
}

std::string string_field(const ordered_json& obj, const std::string& path, const char* key) {
  const ordered_json& v = field(obj, path, key);
  if (!v.is_string()) throw SchemaError(path + "." + key, "expected a string");
  return v.get<std::string>();
}

const ordered_json& array_field(const ordered_json& obj, const std::string& path, const char* key) {
  const ordered_json& v = field(obj, path, key);
  if (!v.is_array()) throw SchemaError(path + "." + key, "expected an array");
  return v;
}

Grid grid_from_text(const std::string& text, const std::string& path) {
  GridText gt = [&] {
    try {
      return parse_grid(text);
    } catch (const ParseError& e) {
      throw SchemaError(path, std::string("malformed grid: ") + e.what());
    }
  }();
  if (gt.avatar) throw SchemaError(path, "avatar markers belong in \"start\", not in the grid");
  return gt.grid;
}

Program program_from_text(const std::string& text, const std::string& path) {
  try {
    Program p = parse_program(text);
    p.source.reset();
    return p;
  } catch (const ParseError& e) {
    throw SchemaError(path, std::string("malformed program text: ") + e.what());
  }
}

Position cell_from_text(const std::string& text, const std::string& path) {
  try {
    return parse_cell_name(text);
  } catch (const ParseError&) {
    throw SchemaError(path, "malformed cell name '" + text + "'");
  }
}

Label label_from_json(const ordered_json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected a label string");
  const std::string s = v.get<std::string>();
  if (s.size() != 1 || !label_from_char(s[0])) throw SchemaError(path, "label must be A, B, C or D");
  return *label_from_char(s[0]);
}

Choice choice_from_json(const ordered_json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  Choice c;
  c.label = label_from_json(field(j, path, "label"), path + ".label");
  const std::string type = string_field(j, path, "type");
  const ordered_json& value = field(j, path, "value");
  const std::string vpath = path + ".value";
  if (type == "count") {
    if (!value.is_number_integer()) throw SchemaError(vpath, "expected an integer");
    c.content = value.get<int>();
    return c;
  }
  if (!value.is_string()) throw SchemaError(vpath, "expected a string");
  const std::string s = value.get<std::string>();
  if (type == "program") {
    c.content = program_from_text(s, vpath);
  } else if (type == "cell") {
    c.content = cell_from_text(s, vpath);
  } else if (type == "grid") {
    c.content = grid_from_text(s, vpath);
  } else if (type == "text") {
    c.content = s;
  } else {
    throw SchemaError(path + ".type", "unknown choice type '" + type + "'");
  }
  return c;
}

Item item_from_json(const ordered_json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  Item it;
  it.id = string_field(j, path, "id");
  if (it.id.empty()) throw SchemaError(path + ".id", "empty id");
  const std::string where = path + " (" + it.id + ")";

  const std::string cat = string_field(j, where, "category");
  auto category = category_from_name(cat);
  if (!category) throw SchemaError(where + ".category", "unknown category '" + cat + "'");
  it.category = *category;

  const std::string kind = string_field(j, where, "kind");
  auto k = kind_from_name(kind);
  if (!k) throw SchemaError(where + ".kind", "unknown kind '" + kind + "'");
  it.kind = *k;

  it.stem = string_field(j, where, "stem");

  const ordered_json& grids = array_field(j, where, "grids");
  for (std::size_t i = 0; i < grids.size(); ++i) {
    const std::string gpath = where + ".grids[" + std::to_string(i) + "]";
    if (!grids[i].is_string()) throw SchemaError(gpath, "expected a string");
    it.grids.push_back(grid_from_text(grids[i].get<std::string>(), gpath));
  }

  if (auto s = j.find("start"); s != j.end()) {
    const std::string spath = where + ".start";
    if (!s->is_object()) throw SchemaError(spath, "expected an object");
    const Position pos = cell_from_text(string_field(*s, spath, "cell"), spath + ".cell");
    const std::string dir = string_field(*s, spath, "dir");
    auto d = direction_from_name(dir);
    if (!d) throw SchemaError(spath + ".dir", "unknown direction '" + dir + "'");
    it.start = AvatarState{pos, *d};
  }

  const ordered_json& programs = array_field(j, where, "programs");
  for (std::size_t i = 0; i < programs.size(); ++i) {
    const std::string ppath = where + ".programs[" + std::to_string(i) + "]";
    if (!programs[i].is_string()) throw SchemaError(ppath, "expected a string");
    it.programs.push_back(program_from_text(programs[i].get<std::string>(), ppath));
  }

  if (auto b = j.find("wall_budget"); b != j.end()) {
    if (!b->is_number_integer()) throw SchemaError(where + ".wall_budget", "expected an integer");
    it.wall_budget = b->get<int>();
  }

  const ordered_json& choices = array_field(j, where, "choices");
  if (choices.size() != 4) {
    throw SchemaError(where + ".choices",
                      "expected 4 choices, found " + std::to_string(choices.size()));
  }
  for (std::size_t i = 0; i < choices.size(); ++i) {
    it.choices.push_back(choice_from_json(choices[i], where + ".choices[" + std::to_string(i) + "]"));
  }
  it.correct = label_from_json(field(j, where, "correct"), where + ".correct");
  return it;
}

}  // namespace

ordered_json bank_to_json(const ItemBank& bank) {
  ordered_json j;
  j["schema"] = std::string(kBankSchema);
  j["name"] = bank.name;
  j["version"] = bank.version;
  j["items"] = ordered_json::array();
  for (const Item& it : bank.items) j["items"].push_back(item_to_json(it));
  return j;
}

ItemBank bank_from_json(const ordered_json& doc) {
  if (!doc.is_object()) throw SchemaError("$", "expected an object");
  const std::string schema = string_field(doc, "$", "schema");
  if (schema != kBankSchema) {
    throw SchemaError("$.schema", "unsupported schema '" + schema + "' (expected ace-bank/1)");
  }
  ItemBank bank;
  bank.name = string_field(doc, "$", "name");
  bank.version = string_field(doc, "$", "version");
  const ordered_json& items = array_field(doc, "$", "items");
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string path = "$.items[" + std::to_string(i) + "]";
    Item it = item_from_json(items[i], path);
    auto [pos, fresh] = seen.emplace(it.id, i);
    if (!fresh) {
      throw SchemaError(path + ".id", "duplicate id '" + it.id + "' (first at items[" +
                                          std::to_string(pos->second) + "])");
    }
    bank.items.push_back(std::move(it));
  }
  return bank;
}

std::string serialize_bank(const ItemBank& bank) { return bank_to_json(bank).dump(2) + "\n"; }

ItemBank parse_bank(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, static_cast<int>(e.byte), "JSON document", e.what());
  }
  return bank_from_json(doc);
}

ItemBank load_bank(const std::filesystem::path& path) { return parse_bank(read_file(path)); }

void save_bank(const ItemBank& bank, const std::filesystem::path& path) {
  write_file_atomic(path, serialize_bank(bank));
}

ValidationReport validate_item(const Item& item) {
  ValidationReport report;
  for (std::string& s : structural_findings(item)) {
    report.findings.push_back({item.id, "structure", std::move(s)});
  }
  if (!report.clean() || item.kind == ItemKind::FreeText) return report;

  try {
    const std::optional<Label> label = pick_correct_choice(item);
    if (label && *label != item.correct) {
      report.findings.push_back({item.id, "answer-key mismatch",
                                 std::string("stored ") + label_char(item.correct) +
                                     ", oracle " + label_char(*label)});
    }
  } catch (const ItemIntegrityError& e) {
    report.findings.push_back(
        {item.id, e.accepted() == 0 ? "no correct" : "multiple correct", e.what()});
  } catch (const Error& e) {
    report.findings.push_back({item.id, "oracle error", e.what()});
  }
  return report;
}

ValidationReport validate_bank(const ItemBank& bank) {
  ValidationReport report;
  std::map<std::string, int> ids;
  for (const Item& it : bank.items) {
    if (++ids[it.id] == 2) report.findings.push_back({it.id, "structure", "duplicate item id"});
    ValidationReport r = validate_item(it);
    for (Finding& f : r.findings) report.findings.push_back(std::move(f));
  }
  return report;
}

}  // namespace ace
