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

#include "ace/psychometrics.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <set>

#include "ace/error.hpp"
#include "ace/item.hpp"
#include "ace/rng.hpp"

namespace ace {

ResponseMatrix::ResponseMatrix(std::vector<std::string> persons, std::vector<std::string> items,
                               std::vector<std::uint8_t> cells)
    : persons_(std::move(persons)), items_(std::move(items)), cells_(std::move(cells)) {
  if (persons_.size() < 2) throw ContractViolation("response matrix needs at least 2 persons");
  if (items_.size() < 2) throw ContractViolation("response matrix needs at least 2 items");
  if (cells_.size() != persons_.size() * items_.size()) {
    throw ContractViolation("response matrix cell count does not match its dimensions");
  }
  if (std::set<std::string>(persons_.begin(), persons_.end()).size() != persons_.size()) {
    throw ContractViolation("duplicate person id");
  }
  if (std::set<std::string>(items_.begin(), items_.end()).size() != items_.size()) {
    throw ContractViolation("duplicate item id");
  }
  for (std::uint8_t c : cells_) {
    if (c > 1) throw ContractViolation("response cells must be 0 or 1");
  }
}

std::vector<int> ResponseMatrix::person_totals() const {
  std::vector<int> out(persons(), 0);
  for (std::size_t p = 0; p < persons(); ++p) {
    for (std::size_t i = 0; i < items(); ++i) out[p] += at(p, i);
  }
  return out;
}

std::vector<int> ResponseMatrix::item_totals() const {
  std::vector<int> out(items(), 0);
  for (std::size_t p = 0; p < persons(); ++p) {
    for (std::size_t i = 0; i < items(); ++i) out[i] += at(p, i);
  }
  return out;
}

ResponseMatrix ResponseMatrix::select_items(const std::vector<std::string>& ids) const {
  std::vector<std::size_t> cols;
  for (const std::string& id : ids) {
    auto it = std::find(items_.begin(), items_.end(), id);
    if (it == items_.end()) throw ContractViolation("unknown item id '" + id + "'");
    cols.push_back(static_cast<std::size_t>(it - items_.begin()));
  }
  std::vector<std::uint8_t> cells;
  cells.reserve(persons() * cols.size());
  for (std::size_t p = 0; p < persons(); ++p) {
    for (std::size_t c : cols) cells.push_back(static_cast<std::uint8_t>(at(p, c)));
  }
  return ResponseMatrix(persons_, ids, std::move(cells));
}

double mean(const std::vector<double>& x) {
  if (x.empty()) return 0.0;
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double sample_variance(const std::vector<double>& x) {
  if (x.size() < 2) return 0.0;
  const double m = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

double cronbach_alpha(const ResponseMatrix& m, const std::optional<std::vector<std::string>>& subset) {
  const ResponseMatrix data = subset ? m.select_items(*subset) : m;
  const std::size_t k = data.items();
  const std::size_t n = data.persons();
  double item_var_sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double> col(n);
    for (std::size_t p = 0; p < n; ++p) col[p] = data.at(p, i);
    item_var_sum += sample_variance(col);
  }
  std::vector<double> totals;
  for (int t : data.person_totals()) totals.push_back(t);
  const double total_var = sample_variance(totals);
  if (total_var <= 0.0) throw UndefinedStatistic("Cronbach alpha undefined: total scores have zero variance");
  const double kk = static_cast<double>(k);
  return kk / (kk - 1.0) * (1.0 - item_var_sum / total_var);
}

double rasch_probability(double theta, double b) {
  const double x = theta - b;
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

// ---------------------------------------------------------------------------
// Joint maximum likelihood

namespace {

constexpr double kMaxNewtonStep = 1.0;

double clamp_step(double d) { return std::clamp(d, -kMaxNewtonStep, kMaxNewtonStep); }

struct Active {
  std::vector<std::size_t> persons;
  std::vector<std::size_t> items;
};

// Drops zero/perfect persons and items until none remain; removing one side
// can make the other extreme.
Active drop_extremes(const ResponseMatrix& m) {
  std::vector<bool> keep_p(m.persons(), true), keep_i(m.items(), true);
  for (bool changed = true; changed;) {
    changed = false;
    std::size_t k = std::count(keep_i.begin(), keep_i.end(), true);
    for (std::size_t p = 0; p < m.persons(); ++p) {
      if (!keep_p[p]) continue;
      std::size_t score = 0;
      for (std::size_t i = 0; i < m.items(); ++i) score += keep_i[i] ? m.at(p, i) : 0;
      if (score == 0 || score == k) {
        keep_p[p] = false;
        changed = true;
      }
    }
    std::size_t n = std::count(keep_p.begin(), keep_p.end(), true);
    for (std::size_t i = 0; i < m.items(); ++i) {
      if (!keep_i[i]) continue;
      std::size_t score = 0;
      for (std::size_t p = 0; p < m.persons(); ++p) score += keep_p[p] ? m.at(p, i) : 0;
      if (score == 0 || score == n) {
        keep_i[i] = false;
        changed = true;
      }
    }
  }
  Active a;
  for (std::size_t p = 0; p < m.persons(); ++p) {
    if (keep_p[p]) a.persons.push_back(p);
  }
  for (std::size_t i = 0; i < m.items(); ++i) {
    if (keep_i[i]) a.items.push_back(i);
  }
  return a;
}

class JointML {
 public:
  JointML(const ResponseMatrix& m, const Active& a) : n_(a.persons.size()), k_(a.items.size()) {
    x_.resize(n_ * k_);
    r_.assign(n_, 0.0);
    s_.assign(k_, 0.0);
    for (std::size_t p = 0; p < n_; ++p) {
      for (std::size_t i = 0; i < k_; ++i) {
        const int v = m.at(a.persons[p], a.items[i]);
        x_[p * k_ + i] = static_cast<std::uint8_t>(v);
        r_[p] += v;
        s_[i] += v;
      }
    }
    b_.resize(k_);
    for (std::size_t i = 0; i < k_; ++i) b_[i] = std::log((static_cast<double>(n_) - s_[i]) / s_[i]);
    const double mb = mean(b_);
    for (double& v : b_) v -= mb;
    theta_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      theta_[p] = std::log(r_[p] / (static_cast<double>(k_) - r_[p]));
    }
  }

  // One person sweep, one item sweep, then recentring. Returns the largest
  // parameter change.
  double sweep() {
    double change = 0.0;
    for (std::size_t p = 0; p < n_; ++p) {
      const double d = clamp_step(person_step(p));
      theta_[p] += d;
      change = std::max(change, std::abs(d));
    }
    for (std::size_t i = 0; i < k_; ++i) {
      double expected = 0.0, info = 0.0;
      for (std::size_t p = 0; p < n_; ++p) {
        const double pr = rasch_probability(theta_[p], b_[i]);
        expected += pr;
        info += pr * (1.0 - pr);
      }
      const double d = clamp_step((s_[i] - expected) / info);
      b_[i] -= d;
      change = std::max(change, std::abs(d));
    }
    const double shift = mean(b_);
    for (double& v : b_) v -= shift;
    for (double& v : theta_) v -= shift;
    return change;
  }

  // Newton iterations on abilities alone, difficulties held fixed.
  void refit_persons(double tolerance, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
      double change = 0.0;
      for (std::size_t p = 0; p < n_; ++p) {
        const double d = clamp_step(person_step(p));
        theta_[p] += d;
        change = std::max(change, std::abs(d));
      }
      if (change < tolerance) return;
    }
  }

  double log_likelihood() const {
    double ll = 0.0;
    for (std::size_t p = 0; p < n_; ++p) {
      for (std::size_t i = 0; i < k_; ++i) {
        const double z = theta_[p] - b_[i];
        // log P = -log(1 + e^-z), log(1 - P) = -log(1 + e^z)
        ll -= x_[p * k_ + i] ? std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
      }
    }
    return ll;
  }

  double max_score_residual() const {
    double worst = 0.0;
    std::vector<double> item_expected(k_, 0.0);
    for (std::size_t p = 0; p < n_; ++p) {
      double expected = 0.0;
      for (std::size_t i = 0; i < k_; ++i) {
        const double pr = rasch_probability(theta_[p], b_[i]);
        expected += pr;
        item_expected[i] += pr;
      }
      worst = std::max(worst, std::abs(r_[p] - expected));
    }
    for (std::size_t i = 0; i < k_; ++i) worst = std::max(worst, std::abs(s_[i] - item_expected[i]));
    return worst;
  }

  std::vector<double> standard_errors() const {
    std::vector<double> se(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      double info = 0.0;
      for (std::size_t i = 0; i < k_; ++i) {
        const double pr = rasch_probability(theta_[p], b_[i]);
        info += pr * (1.0 - pr);
      }
      se[p] = 1.0 / std::sqrt(info);
    }
    return se;
  }

  std::vector<double>& b() { return b_; }
  const std::vector<double>& theta() const { return theta_; }

 private:
  double person_step(std::size_t p) const {
    double expected = 0.0, info = 0.0;
    for (std::size_t i = 0; i < k_; ++i) {
      const double pr = rasch_probability(theta_[p], b_[i]);
      expected += pr;
      info += pr * (1.0 - pr);
    }
    return (r_[p] - expected) / info;
  }

  std::size_t n_, k_;
  std::vector<std::uint8_t> x_;
  std::vector<double> r_, s_;
  std::vector<double> b_, theta_;
};

}  // namespace

RaschFit rasch_fit(const ResponseMatrix& m, const RaschOptions& opts) {
  const Active active = drop_extremes(m);
  if (active.persons.size() < 2 || active.items.size() < 2) {
    throw UndefinedStatistic("Rasch model undefined: fewer than 2 non-extreme persons or items");
  }
  RaschFit fit;
  std::vector<bool> kept_p(m.persons(), false), kept_i(m.items(), false);
  for (std::size_t p : active.persons) {
    kept_p[p] = true;
    fit.person_ids.push_back(m.person_ids()[p]);
  }
  for (std::size_t i : active.items) {
    kept_i[i] = true;
    fit.item_ids.push_back(m.item_ids()[i]);
  }
  for (std::size_t p = 0; p < m.persons(); ++p) {
    if (!kept_p[p]) fit.extreme_persons.push_back(m.person_ids()[p]);
  }
  for (std::size_t i = 0; i < m.items(); ++i) {
    if (!kept_i[i]) fit.extreme_items.push_back(m.item_ids()[i]);
  }

  JointML jml(m, active);
  for (int it = 1; it <= opts.max_iter; ++it) {
    const double change = jml.sweep();
    fit.iterations = it;
    fit.log_likelihood.push_back(jml.log_likelihood());
    if (change < opts.tolerance) {
      fit.converged = true;
      break;
    }
  }
  fit.max_score_residual = jml.max_score_residual();

  if (opts.bias_correction) {
    const double k = static_cast<double>(active.items.size());
    for (double& v : jml.b()) v *= (k - 1.0) / k;
    jml.refit_persons(opts.tolerance, opts.max_iter);
    fit.bias_corrected = true;
  }

  fit.b = jml.b();
  fit.theta = jml.theta();
  fit.se_theta = jml.standard_errors();
  const double var_theta = sample_variance(fit.theta);
  std::vector<double> se2;
  for (double s : fit.se_theta) se2.push_back(s * s);
  fit.person_reliability = var_theta > 0.0 ? (var_theta - mean(se2)) / var_theta
                                           : -std::numeric_limits<double>::infinity();
  return fit;
}

std::vector<double> default_theta_grid() {
  std::vector<double> grid;
  for (int i = -40; i <= 40; ++i) grid.push_back(i / 10.0);
  return grid;
}

std::vector<CurvePoint> icc(double b, const std::vector<double>& theta_grid) {
  std::vector<CurvePoint> out;
  out.reserve(theta_grid.size());
  for (double t : theta_grid) out.push_back({t, rasch_probability(t, b)});
  return out;
}

WrightMap wright_map(const RaschFit& fit, double bin_width) {
  if (!(bin_width > 0.0)) throw ContractViolation("bin width must be positive");
  WrightMap map;
  map.bin_width = bin_width;
  for (std::size_t i = 0; i < fit.b.size(); ++i) map.items.push_back({fit.item_ids[i], fit.b[i]});
  std::stable_sort(map.items.begin(), map.items.end(),
                   [](const ItemMarker& a, const ItemMarker& b) { return a.b < b.b; });

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : fit.theta) lo = std::min(lo, v), hi = std::max(hi, v);
  for (double v : fit.b) lo = std::min(lo, v), hi = std::max(hi, v);
  if (!std::isfinite(lo)) return map;
  const double first = std::floor(lo / bin_width) * bin_width;
  const auto nbins = static_cast<std::size_t>(std::floor((hi - first) / bin_width)) + 1;
  for (std::size_t j = 0; j < nbins; ++j) {
    const double a = first + static_cast<double>(j) * bin_width;
    map.bins.push_back({a, a + bin_width, 0});
  }
  for (double v : fit.theta) {
    auto j = static_cast<std::size_t>(std::floor((v - first) / bin_width));
    map.bins[std::min(j, nbins - 1)].persons += 1;
  }
  return map;
}

double student_t_two_sided_p(double t, double df) {
  if (std::isinf(t)) return 0.0;
  if (std::isnan(t) || !(df > 0.0)) throw UndefinedStatistic("t-test undefined");
  const boost::math::students_t dist(df);
  const double p = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  return std::min(1.0, p);
}

CorrelationResult pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ContractViolation("pearson: inputs differ in length");
  if (x.size() < 3) throw ContractViolation("pearson: need at least 3 pairs");
  const double mx = mean(x), my = mean(y);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) throw UndefinedStatistic("pearson: constant input");
  CorrelationResult res;
  res.n = static_cast<int>(x.size());
  res.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  const double df = res.n - 2.0;
  if (std::abs(res.r) == 1.0) {
    res.p_two_sided = 0.0;
  } else {
    const double t = res.r * std::sqrt(df / (1.0 - res.r * res.r));
    res.p_two_sided = student_t_two_sided_p(t, df);
  }
  return res;
}

WelchResult welch_t(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < 2 || b.size() < 2) throw ContractViolation("welch_t: each sample needs 2 values");
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  const double va = sample_variance(a) / na, vb = sample_variance(b) / nb;
  const double diff = mean(a) - mean(b);
  WelchResult res;
  if (va + vb == 0.0) {
    if (diff != 0.0) throw UndefinedStatistic("welch_t: both samples constant with different means");
    res.t = 0.0;
    res.df = na + nb - 2.0;
    res.p_two_sided = 1.0;
    return res;
  }
  res.t = diff / std::sqrt(va + vb);
  res.df = (va + vb) * (va + vb) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
  res.p_two_sided = student_t_two_sided_p(res.t, res.df);
  return res;
}

ResponseMatrix simulate_rasch(const std::vector<double>& theta, const std::vector<double>& b,
                              std::uint64_t seed, std::vector<std::string> item_ids) {
  if (item_ids.empty()) {
    for (std::size_t i = 0; i < b.size(); ++i) item_ids.push_back(item_id(static_cast<int>(i) + 1));
  }
  if (item_ids.size() != b.size()) throw ContractViolation("simulate_rasch: item id count mismatch");
  std::vector<std::string> persons;
  for (std::size_t p = 0; p < theta.size(); ++p) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "P%04zu", p + 1);
    persons.emplace_back(buf);
  }
  Rng rng(seed);
  std::vector<std::uint8_t> cells;
  cells.reserve(theta.size() * b.size());
  for (double t : theta) {
    for (double d : b) cells.push_back(rng.uniform() < rasch_probability(t, d) ? 1 : 0);
  }
  return ResponseMatrix(std::move(persons), std::move(item_ids), std::move(cells));
}

}  // namespace ace
