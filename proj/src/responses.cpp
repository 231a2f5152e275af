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

#include "ace/responses.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include "ace/error.hpp"
#include "ace/io.hpp"
#include "ace/rng.hpp"

namespace ace {

bool ResponseTable::has_column(std::string_view name) const {
  return std::find(meta_columns.begin(), meta_columns.end(), name) != meta_columns.end();
}

namespace {

struct Field {
  std::string text;
  int column;  // 1-based character column of the field start
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<Field> split_line(std::string_view line) {
  std::vector<Field> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    const std::string_view raw =
        line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back({std::string(trim(raw)), static_cast<int>(start) + 1});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(const std::string& s) {
  T v{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

std::optional<bool> parse_flag(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "1" || s == "yes" || s == "true") return true;
  if (s == "0" || s == "no" || s == "false") return false;
  return std::nullopt;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

ResponseTable parse_responses(std::string_view csv) {
  std::vector<std::pair<int, std::string_view>> lines;
  int lineno = 0;
  for (std::size_t pos = 0; pos <= csv.size();) {
    std::size_t nl = csv.find('\n', pos);
    if (nl == std::string_view::npos) nl = csv.size();
    ++lineno;
    const std::string_view line = csv.substr(pos, nl - pos);
    if (!trim(line).empty()) lines.emplace_back(lineno, line);
    pos = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, 1, "header", "empty response file");

  const auto header = split_line(lines.front().second);
  const int header_line = lines.front().first;
  if (header.front().text != "student_id") {
    throw ParseError(header_line, 1, "student_id", "first column must be student_id");
  }
  enum class Col { Grade, Age, AfterSchool, External, Item };
  std::vector<Col> roles;
  std::vector<std::string> items, meta_columns;
  std::set<std::string> seen{"student_id"};
  for (std::size_t c = 1; c < header.size(); ++c) {
    const std::string& name = header[c].text;
    if (name.empty()) throw ParseError(header_line, header[c].column, "column name", "empty column name");
    if (!seen.insert(name).second) {
      throw ParseError(header_line, header[c].column, "", "duplicate column '" + name + "'");
    }
    if (name == "grade") roles.push_back(Col::Grade);
    else if (name == "age") roles.push_back(Col::Age);
    else if (name == "after_school_programming") roles.push_back(Col::AfterSchool);
    else if (name == "external_score") roles.push_back(Col::External);
    else {
      roles.push_back(Col::Item);
      items.push_back(name);
      continue;
    }
    meta_columns.push_back(name);
  }

  std::vector<std::string> persons;
  std::vector<PersonMeta> meta;
  std::vector<std::uint8_t> cells;
  std::set<std::string> person_ids;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto [ln, text] = lines[r];
    const auto fields = split_line(text);
    if (fields.size() != header.size()) {
      throw ParseError(ln, 1, std::to_string(header.size()) + " fields",
                       "row has " + std::to_string(fields.size()) + " fields");
    }
    if (fields[0].text.empty()) throw ParseError(ln, 1, "student_id", "missing student id");
    if (!person_ids.insert(fields[0].text).second) {
      throw ParseError(ln, 1, "", "duplicate student id '" + fields[0].text + "'");
    }
    persons.push_back(fields[0].text);
    PersonMeta pm;
    for (std::size_t c = 1; c < fields.size(); ++c) {
      const Field& f = fields[c];
      const Col role = roles[c - 1];
      if (role == Col::Item) {
        if (f.text == "0" || f.text == "1") {
          cells.push_back(f.text == "1" ? 1 : 0);
          continue;
        }
        throw ParseError(ln, f.column, "0 or 1",
                         f.text.empty() ? "missing response for " + header[c].text
                                        : "invalid response '" + f.text + "' for " + header[c].text);
      }
      if (f.text.empty()) continue;
      bool ok = true;
      switch (role) {
        case Col::Grade:
          pm.grade = parse_number<int>(f.text);
          ok = pm.grade.has_value();
          break;
        case Col::Age:
          pm.age = parse_number<double>(f.text);
          ok = pm.age.has_value();
          break;
        case Col::AfterSchool:
          pm.after_school = parse_flag(f.text);
          ok = pm.after_school.has_value();
          break;
        case Col::External:
          pm.external_score = parse_number<double>(f.text);
          ok = pm.external_score.has_value();
          break;
        case Col::Item:
          break;
      }
      if (!ok) throw ParseError(ln, f.column, "", "unreadable " + header[c].text + " '" + f.text + "'");
    }
    meta.push_back(pm);
  }
  return ResponseTable{ResponseMatrix(std::move(persons), std::move(items), std::move(cells)),
                       std::move(meta), std::move(meta_columns)};
}

ResponseTable load_responses(const std::filesystem::path& path) {
  return parse_responses(read_file(path));
}

std::string format_responses(const ResponseTable& table) {
  const ResponseMatrix& m = table.matrix;
  std::string out = "student_id";
  for (const std::string& c : table.meta_columns) out += "," + c;
  for (const std::string& id : m.item_ids()) out += "," + id;
  out += '\n';
  for (std::size_t p = 0; p < m.persons(); ++p) {
    out += m.person_ids()[p];
    const PersonMeta& pm = table.meta[p];
    for (const std::string& c : table.meta_columns) {
      out += ',';
      if (c == "grade" && pm.grade) out += std::to_string(*pm.grade);
      if (c == "age" && pm.age) out += format_double(*pm.age);
      if (c == "after_school_programming" && pm.after_school) out += *pm.after_school ? "1" : "0";
      if (c == "external_score" && pm.external_score) out += format_double(*pm.external_score);
    }
    for (std::size_t i = 0; i < m.items(); ++i) out += m.at(p, i) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

std::vector<double> simulation_difficulties(const ItemBank& bank) {
  std::vector<double> b(bank.items.size());
  for (BloomCategory c : kAllCategories) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < bank.items.size(); ++i) {
      if (bank.items[i].category == c) idx.push_back(i);
    }
    const double offset = c == BloomCategory::ApplyingAnalyzing     ? -0.8
                          : c == BloomCategory::AnalyzingEvaluating ? 0.3
                                                                    : 0.6;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      const double spread = idx.size() > 1 ? -1.0 + 2.0 * static_cast<double>(j) / (idx.size() - 1) : 0.0;
      b[idx[j]] = offset + spread;
    }
  }
  return b;
}

ResponseTable simulate_responses(const ItemBank& bank, const SimulationOptions& opts) {
  if (opts.persons < 2) throw ContractViolation("simulation needs at least 2 persons");
  if (bank.items.size() < 2) throw ContractViolation("simulation needs a bank with at least 2 items");
  constexpr std::array<int, 5> kGradeWeights = {51, 34, 114, 81, 91};
  const int weight_total = 371;

  Rng rng(derive_seed(opts.seed, 0));
  std::vector<double> theta;
  std::vector<PersonMeta> meta;
  for (int p = 0; p < opts.persons; ++p) {
    int draw = rng.between(0, weight_total - 1), g = 0;
    while (draw >= kGradeWeights[g]) draw -= kGradeWeights[g++];
    PersonMeta pm;
    pm.grade = 3 + g;
    pm.age = *pm.grade + 5 + rng.between(0, 1);
    pm.after_school = rng.chance(0.2);
    double t = 0.3 * (*pm.grade - 5) + rng.normal() + (*pm.after_school ? 0.3 : 0.0);
    pm.external_score = std::clamp(std::round(11.0 + 2.0 * t + 4.5 * rng.normal()), 0.0, 20.0);
    theta.push_back(t);
    meta.push_back(pm);
  }
  std::vector<std::string> ids;
  for (const Item& it : bank.items) ids.push_back(it.id);
  ResponseMatrix m = simulate_rasch(theta, simulation_difficulties(bank), derive_seed(opts.seed, 1), ids);
  return ResponseTable{std::move(m), std::move(meta),
                       std::vector<std::string>(kMetaColumns.begin(), kMetaColumns.end())};
}

}  // namespace ace
