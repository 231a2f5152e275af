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

#include "ace/report.hpp"

#include <cmath>
#include <functional>
#include <map>

#include "ace/error.hpp"

namespace ace {

namespace {

std::vector<double> as_doubles(const std::vector<int>& v) { return {v.begin(), v.end()}; }

// Item columns grouped by category, in response-column order.
std::map<BloomCategory, std::vector<std::string>> items_by_category(const ResponseMatrix& m,
                                                                     const ItemBank& bank) {
  std::map<BloomCategory, std::vector<std::string>> out;
  for (const std::string& id : m.item_ids()) {
    const Item* item = bank.find(id);
    if (item == nullptr) throw ContractViolation("response column '" + id + "' is not an item of the bank");
    out[item->category].push_back(id);
  }
  return out;
}

std::vector<double> subscores(const ResponseMatrix& m, const std::vector<std::string>& ids) {
  return as_doubles(m.select_items(ids).person_totals());
}

ordered_json correlation_json(const std::optional<CorrelationResult>& c) {
  if (!c) return nullptr;
  return {{"r", c->r}, {"n", c->n}, {"p", c->p_two_sided}};
}

std::optional<CorrelationResult> try_pearson(const std::vector<double>& x, const std::vector<double>& y,
                                             const std::string& what, std::vector<std::string>& notes) {
  try {
    return pearson(x, y);
  } catch (const Error& e) {
    notes.push_back(what + " omitted: " + e.what());
    return std::nullopt;
  }
}

// Totals and external scores of the persons that have an external score.
std::pair<std::vector<double>, std::vector<double>> with_external(const ResponseTable& t,
                                                                  const std::vector<double>& score) {
  std::vector<double> x, y;
  for (std::size_t p = 0; p < t.meta.size(); ++p) {
    if (t.meta[p].external_score) {
      x.push_back(score[p]);
      y.push_back(*t.meta[p].external_score);
    }
  }
  return {x, y};
}

}  // namespace

ReliabilityReport descriptive_report(const ResponseTable& table, const ItemBank& bank) {
  const ResponseMatrix& m = table.matrix;
  const auto groups = items_by_category(m, bank);
  ReliabilityReport r;
  r.persons = static_cast<int>(m.persons());
  r.items = static_cast<int>(m.items());

  const std::vector<double> totals = as_doubles(m.person_totals());
  r.mean_score = mean(totals);
  r.sd_score = std::sqrt(sample_variance(totals));
  r.score_distribution.assign(m.items() + 1, 0);
  for (double t : totals) r.score_distribution[static_cast<std::size_t>(t)] += 1;

  const std::vector<int> item_totals = m.item_totals();
  for (std::size_t i = 0; i < m.items(); ++i) {
    r.item_success_rates.push_back({m.item_ids()[i], item_totals[i] / static_cast<double>(m.persons())});
  }

  if (table.has_column("grade")) {
    std::map<int, std::vector<double>> by_grade;
    for (std::size_t p = 0; p < m.persons(); ++p) {
      if (table.meta[p].grade) by_grade[*table.meta[p].grade].push_back(totals[p]);
    }
    for (const auto& [g, v] : by_grade) {
      r.grade_means.push_back({std::to_string(g), static_cast<int>(v.size()), mean(v)});
    }
  } else {
    r.notes.push_back("grade means omitted: no grade column");
  }

  if (table.has_column("after_school_programming")) {
    std::vector<double> yes, no;
    for (std::size_t p = 0; p < m.persons(); ++p) {
      const auto& flag = table.meta[p].after_school;
      if (flag) (*flag ? yes : no).push_back(totals[p]);
    }
    if (!yes.empty()) r.after_school_means.push_back({"yes", static_cast<int>(yes.size()), mean(yes)});
    if (!no.empty()) r.after_school_means.push_back({"no", static_cast<int>(no.size()), mean(no)});
  } else {
    r.notes.push_back("after-school means omitted: no after_school_programming column");
  }

  for (const auto& [cat, ids] : groups) {
    CategorySummary cs{cat, ids, mean(subscores(m, ids)), std::nullopt};
    if (ids.size() >= 2) {
      try {
        cs.alpha = cronbach_alpha(m, ids);
      } catch (const UndefinedStatistic& e) {
        r.notes.push_back(std::string(category_label(cat)) + " alpha omitted: " + e.what());
      }
    } else {
      r.notes.push_back(std::string(category_label(cat)) + " alpha omitted: fewer than 2 items");
    }
    r.categories.push_back(std::move(cs));
  }

  r.alpha_overall = cronbach_alpha(m);

  if (table.has_column("external_score")) {
    const auto [x, y] = with_external(table, totals);
    r.total_vs_external = try_pearson(x, y, "total vs external_score correlation", r.notes);
  } else {
    r.notes.push_back("external correlation omitted: no external_score column");
  }
  return r;
}

ordered_json analyze(const ResponseTable& table, const ItemBank& bank, const AnalysisInputs& inputs,
                     const RaschOptions& rasch) {
  const ResponseMatrix& m = table.matrix;
  ReliabilityReport rep = descriptive_report(table, bank);
  std::vector<std::string>& notes = rep.notes;

  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["tool"] = {{"name", "ace"}, {"version", kToolVersion}};
  doc["inputs"] = {{"responses_sha256", inputs.responses_sha256}, {"bank_sha256", inputs.bank_sha256},
                   {"bank_name", bank.name}, {"bank_version", bank.version}};

  ordered_json d;
  d["persons"] = rep.persons;
  d["items"] = rep.items;
  d["mean_score"] = rep.mean_score;
  d["sd_score"] = rep.sd_score;
  d["score_distribution"] = ordered_json::array();
  for (std::size_t s = 0; s < rep.score_distribution.size(); ++s) {
    d["score_distribution"].push_back({{"score", s}, {"count", rep.score_distribution[s]}});
  }
  d["item_success_rates"] = ordered_json::array();
  for (const ItemRate& ir : rep.item_success_rates) d["item_success_rates"].push_back({{"id", ir.id}, {"rate", ir.rate}});
  auto group_json = [](const std::vector<GroupMean>& gs) {
    ordered_json a = ordered_json::array();
    for (const GroupMean& g : gs) a.push_back({{"group", g.group}, {"n", g.n}, {"mean", g.mean}});
    return a;
  };
  d["grade_means"] = group_json(rep.grade_means);
  d["after_school_means"] = group_json(rep.after_school_means);
  d["categories"] = ordered_json::array();
  for (const CategorySummary& cs : rep.categories) {
    d["categories"].push_back({{"category", category_name(cs.category)},
                               {"label", category_label(cs.category)},
                               {"items", cs.items},
                               {"mean_subscore", cs.mean_subscore},
                               {"alpha", cs.alpha ? ordered_json(*cs.alpha) : ordered_json(nullptr)}});
  }
  d["alpha_overall"] = rep.alpha_overall;
  doc["descriptive"] = d;

  const RaschFit fit = rasch_fit(m, rasch);
  ordered_json rj;
  rj["estimator"] = "JML";
  rj["tolerance"] = rasch.tolerance;
  rj["max_iter"] = rasch.max_iter;
  rj["bias_corrected"] = fit.bias_corrected;
  rj["converged"] = fit.converged;
  rj["iterations"] = fit.iterations;
  rj["person_reliability"] = fit.person_reliability;
  rj["max_score_residual"] = fit.max_score_residual;
  rj["items"] = ordered_json::array();
  for (std::size_t i = 0; i < fit.b.size(); ++i) rj["items"].push_back({{"id", fit.item_ids[i]}, {"b", fit.b[i]}});
  rj["persons"] = ordered_json::array();
  for (std::size_t p = 0; p < fit.theta.size(); ++p) {
    rj["persons"].push_back({{"id", fit.person_ids[p]}, {"theta", fit.theta[p]}, {"se", fit.se_theta[p]}});
  }
  rj["extreme_persons"] = fit.extreme_persons;
  rj["extreme_items"] = fit.extreme_items;
  rj["log_likelihood"] = fit.log_likelihood;
  doc["rasch"] = rj;
  if (!fit.converged) notes.push_back("Rasch estimation did not converge within max_iter sweeps");
  if (!fit.extreme_items.empty()) notes.push_back("items answered by everyone or no one were excluded from the Rasch fit");

  const std::vector<double> grid = default_theta_grid();
  ordered_json curves = ordered_json::array();
  for (std::size_t i = 0; i < fit.b.size(); ++i) {
    std::vector<double> p;
    for (const CurvePoint& pt : icc(fit.b[i], grid)) p.push_back(pt.p);
    curves.push_back({{"id", fit.item_ids[i]}, {"b", fit.b[i]}, {"p", p}});
  }
  doc["icc"] = {{"theta", grid}, {"curves", curves}};

  const WrightMap wm = wright_map(fit);
  ordered_json bins = ordered_json::array();
  for (const WrightBin& b : wm.bins) bins.push_back({{"lo", b.lo}, {"hi", b.hi}, {"persons", b.persons}});
  ordered_json markers = ordered_json::array();
  for (const ItemMarker& im : wm.items) markers.push_back({{"id", im.id}, {"b", im.b}});
  doc["wright_map"] = {{"bin_width", wm.bin_width}, {"n_persons", fit.theta.size()}, {"bins", bins}, {"items", markers}};

  // Correlations: total and category subscores against each other and the
  // external score.
  const std::vector<double> totals = as_doubles(m.person_totals());
  const auto groups = items_by_category(m, bank);
  std::vector<std::string> labels;
  std::vector<std::vector<double>> sub;
  for (const auto& [cat, ids] : groups) {
    labels.emplace_back(category_label(cat));
    sub.push_back(subscores(m, ids));
  }
  ordered_json cj;
  cj["total_vs_external"] = correlation_json(rep.total_vs_external);
  ordered_json vs_total = ordered_json::array(), vs_external = ordered_json::array();
  for (std::size_t c = 0; c < sub.size(); ++c) {
    vs_total.push_back({{"category", labels[c]},
                        {"result", correlation_json(try_pearson(sub[c], totals, labels[c] + " vs total", notes))}});
    if (table.has_column("external_score")) {
      const auto [x, y] = with_external(table, sub[c]);
      vs_external.push_back(
          {{"category", labels[c]},
           {"result", correlation_json(try_pearson(x, y, labels[c] + " vs external_score", notes))}});
    }
  }
  cj["category_vs_total"] = vs_total;
  cj["category_vs_external"] = vs_external;
  ordered_json r_rows = ordered_json::array(), p_rows = ordered_json::array();
  for (std::size_t a = 0; a < sub.size(); ++a) {
    ordered_json rr = ordered_json::array(), pr = ordered_json::array();
    for (std::size_t b = 0; b < sub.size(); ++b) {
      std::optional<CorrelationResult> c;
      if (a == b) {
        c = CorrelationResult{1.0, rep.persons, 0.0};
      } else if (a < b) {
        c = try_pearson(sub[a], sub[b], labels[a] + " vs " + labels[b], notes);
      } else {
        c = try_pearson(sub[a], sub[b], "", notes);
        if (!c) notes.pop_back();  // already noted for the mirrored pair
      }
      rr.push_back(c ? ordered_json(c->r) : ordered_json(nullptr));
      pr.push_back(c ? ordered_json(c->p_two_sided) : ordered_json(nullptr));
    }
    r_rows.push_back(rr);
    p_rows.push_back(pr);
  }
  cj["category_matrix"] = {{"labels", labels}, {"r", r_rows}, {"p", p_rows}};
  doc["correlations"] = cj;

  ordered_json welch = nullptr;
  if (table.has_column("after_school_programming")) {
    std::vector<double> yes, no;
    for (std::size_t p = 0; p < m.persons(); ++p) {
      const auto& flag = table.meta[p].after_school;
      if (flag) (*flag ? yes : no).push_back(totals[p]);
    }
    try {
      const WelchResult w = welch_t(yes, no);
      welch = {{"t", w.t}, {"df", w.df}, {"p", w.p_two_sided},
               {"n_yes", yes.size()}, {"n_no", no.size()}, {"mean_yes", mean(yes)}, {"mean_no", mean(no)}};
    } catch (const Error& e) {
      notes.push_back(std::string("after-school Welch test omitted: ") + e.what());
    }
  }
  doc["welch_after_school"] = welch;
  doc["notes"] = notes;
  return doc;
}

// ---------------------------------------------------------------------------
// Schema check

namespace {

class SchemaChecker {
 public:
  using Pred = std::function<bool(const ordered_json&)>;

  static bool number(const ordered_json& j) { return j.is_number(); }
  static bool integer(const ordered_json& j) { return j.is_number_integer(); }
  static bool string(const ordered_json& j) { return j.is_string(); }
  static bool boolean(const ordered_json& j) { return j.is_boolean(); }
  static bool array(const ordered_json& j) { return j.is_array(); }
  static bool object(const ordered_json& j) { return j.is_object(); }
  static bool number_or_null(const ordered_json& j) { return j.is_number() || j.is_null(); }

  // Returns the member when present and well-typed, else nullptr.
  const ordered_json* field(const ordered_json& obj, const std::string& path, const std::string& key,
                            const Pred& ok, std::string_view type) {
    if (!obj.is_object() || !obj.contains(key)) {
      problems.push_back(path + "." + key + ": missing");
      return nullptr;
    }
    const ordered_json& v = obj.at(key);
    if (!ok(v)) {
      problems.push_back(path + "." + key + ": expected " + std::string(type));
      return nullptr;
    }
    return &v;
  }

  void each(const ordered_json* arr, const std::string& path,
            const std::function<void(const ordered_json&, const std::string&)>& fn) {
    if (arr == nullptr) return;
    for (std::size_t i = 0; i < arr->size(); ++i) fn((*arr)[i], path + "[" + std::to_string(i) + "]");
  }

  std::vector<std::string> problems;
};

ordered_json::const_pointer nonnull_object(const ordered_json* j) { return j && j->is_object() ? j : nullptr; }

}  // namespace

std::vector<std::string> validate_report_schema(const ordered_json& doc) {
  SchemaChecker c;
  using S = SchemaChecker;
  const std::string root = "$";
  if (!doc.is_object()) return {"$: expected object"};
  if (const auto* s = c.field(doc, root, "schema", S::string, "string"); s && *s != kReportSchema) {
    c.problems.push_back("$.schema: expected \"" + std::string(kReportSchema) + "\"");
  }
  if (const auto* t = c.field(doc, root, "tool", S::object, "object")) {
    c.field(*t, "$.tool", "name", S::string, "string");
    c.field(*t, "$.tool", "version", S::string, "string");
  }
  if (const auto* in = c.field(doc, root, "inputs", S::object, "object")) {
    c.field(*in, "$.inputs", "responses_sha256", S::string, "string");
    c.field(*in, "$.inputs", "bank_sha256", S::string, "string");
  }

  if (const auto* d = c.field(doc, root, "descriptive", S::object, "object")) {
    const std::string p = "$.descriptive";
    c.field(*d, p, "persons", S::integer, "integer");
    c.field(*d, p, "items", S::integer, "integer");
    c.field(*d, p, "mean_score", S::number, "number");
    c.field(*d, p, "sd_score", S::number, "number");
    c.field(*d, p, "alpha_overall", S::number, "number");
    c.each(c.field(*d, p, "score_distribution", S::array, "array"), p + ".score_distribution",
           [&](const ordered_json& e, const std::string& ep) {
             c.field(e, ep, "score", S::integer, "integer");
             c.field(e, ep, "count", S::integer, "integer");
           });
    c.each(c.field(*d, p, "item_success_rates", S::array, "array"), p + ".item_success_rates",
           [&](const ordered_json& e, const std::string& ep) {
             c.field(e, ep, "id", S::string, "string");
             c.field(e, ep, "rate", S::number, "number");
           });
    for (const char* key : {"grade_means", "after_school_means"}) {
      c.each(c.field(*d, p, key, S::array, "array"), p + "." + key, [&](const ordered_json& e, const std::string& ep) {
        c.field(e, ep, "group", S::string, "string");
        c.field(e, ep, "n", S::integer, "integer");
        c.field(e, ep, "mean", S::number, "number");
      });
    }
    c.each(c.field(*d, p, "categories", S::array, "array"), p + ".categories",
           [&](const ordered_json& e, const std::string& ep) {
             c.field(e, ep, "category", S::string, "string");
             c.field(e, ep, "label", S::string, "string");
             c.field(e, ep, "items", S::array, "array");
             c.field(e, ep, "mean_subscore", S::number, "number");
             c.field(e, ep, "alpha", S::number_or_null, "number or null");
           });
  }

  if (const auto* r = c.field(doc, root, "rasch", S::object, "object")) {
    const std::string p = "$.rasch";
    c.field(*r, p, "estimator", S::string, "string");
    c.field(*r, p, "converged", S::boolean, "boolean");
    c.field(*r, p, "bias_corrected", S::boolean, "boolean");
    c.field(*r, p, "iterations", S::integer, "integer");
    c.field(*r, p, "person_reliability", S::number, "number");
    c.field(*r, p, "max_score_residual", S::number, "number");
    c.field(*r, p, "extreme_persons", S::array, "array");
    c.field(*r, p, "extreme_items", S::array, "array");
    c.field(*r, p, "log_likelihood", S::array, "array");
    c.each(c.field(*r, p, "items", S::array, "array"), p + ".items", [&](const ordered_json& e, const std::string& ep) {
      c.field(e, ep, "id", S::string, "string");
      c.field(e, ep, "b", S::number, "number");
    });
    c.each(c.field(*r, p, "persons", S::array, "array"), p + ".persons",
           [&](const ordered_json& e, const std::string& ep) {
             c.field(e, ep, "id", S::string, "string");
             c.field(e, ep, "theta", S::number, "number");
             c.field(e, ep, "se", S::number, "number");
           });
  }

  if (const auto* icc_doc = c.field(doc, root, "icc", S::object, "object")) {
    const auto* grid = c.field(*icc_doc, "$.icc", "theta", S::array, "array");
    c.each(c.field(*icc_doc, "$.icc", "curves", S::array, "array"), "$.icc.curves",
           [&](const ordered_json& e, const std::string& ep) {
             c.field(e, ep, "id", S::string, "string");
             c.field(e, ep, "b", S::number, "number");
             const auto* pts = c.field(e, ep, "p", S::array, "array");
             if (pts && grid && pts->size() != grid->size()) {
               c.problems.push_back(ep + ".p: length differs from $.icc.theta");
             }
           });
  }

  if (const auto* w = c.field(doc, root, "wright_map", S::object, "object")) {
    c.field(*w, "$.wright_map", "bin_width", S::number, "number");
    c.field(*w, "$.wright_map", "n_persons", S::integer, "integer");
    c.each(c.field(*w, "$.wright_map", "bins", S::array, "array"), "$.wright_map.bins",
           [&](const ordered_json& e, const std::string& ep) {
             c.field(e, ep, "lo", S::number, "number");
             c.field(e, ep, "hi", S::number, "number");
             c.field(e, ep, "persons", S::integer, "integer");
           });
    c.each(c.field(*w, "$.wright_map", "items", S::array, "array"), "$.wright_map.items",
           [&](const ordered_json& e, const std::string& ep) {
             c.field(e, ep, "id", S::string, "string");
             c.field(e, ep, "b", S::number, "number");
           });
  }

  if (const auto* cor = nonnull_object(c.field(doc, root, "correlations", S::object, "object"))) {
    const std::string p = "$.correlations";
    auto check_result = [&](const ordered_json& e, const std::string& ep) {
      if (e.is_null()) return;
      c.field(e, ep, "r", S::number, "number");
      c.field(e, ep, "n", S::integer, "integer");
      c.field(e, ep, "p", S::number, "number");
    };
    if (cor->contains("total_vs_external")) check_result(cor->at("total_vs_external"), p + ".total_vs_external");
    else c.problems.push_back(p + ".total_vs_external: missing");
    for (const char* key : {"category_vs_total", "category_vs_external"}) {
      c.each(c.field(*cor, p, key, S::array, "array"), p + "." + key, [&](const ordered_json& e, const std::string& ep) {
        c.field(e, ep, "category", S::string, "string");
        if (e.is_object() && e.contains("result")) check_result(e.at("result"), ep + ".result");
        else c.problems.push_back(ep + ".result: missing");
      });
    }
    if (const auto* mat = c.field(*cor, p, "category_matrix", S::object, "object")) {
      const auto* labels = c.field(*mat, p + ".category_matrix", "labels", S::array, "array");
      for (const char* key : {"r", "p"}) {
        const auto* rows = c.field(*mat, p + ".category_matrix", key, S::array, "array");
        if (!rows || !labels) continue;
        bool square = rows->size() == labels->size();
        for (const auto& row : *rows) {
          square = square && row.is_array() && row.size() == labels->size();
          if (row.is_array()) {
            for (const auto& v : row) square = square && (v.is_number() || v.is_null());
          }
        }
        if (!square) c.problems.push_back(p + ".category_matrix." + key + ": expected a square matrix of numbers");
      }
    }
  }

  if (!doc.contains("welch_after_school")) {
    c.problems.push_back("$.welch_after_school: missing");
  } else if (const auto& w = doc.at("welch_after_school"); !w.is_null()) {
    if (!w.is_object()) {
      c.problems.push_back("$.welch_after_school: expected object or null");
    } else {
      for (const char* key : {"t", "df", "p", "mean_yes", "mean_no"}) c.field(w, "$.welch_after_school", key, S::number, "number");
      for (const char* key : {"n_yes", "n_no"}) c.field(w, "$.welch_after_school", key, S::integer, "integer");
    }
  }
  c.field(doc, root, "notes", S::array, "array");
  return c.problems;
}

}  // namespace ace
