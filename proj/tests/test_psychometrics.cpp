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

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "ace/error.hpp"
#include "ace/psychometrics.hpp"
#include "doctest.h"

using namespace ace;

namespace {

ResponseMatrix matrix(const std::vector<std::vector<int>>& rows) {
  std::vector<std::string> persons, items;
  std::vector<std::uint8_t> cells;
  for (std::size_t i = 0; i < rows.size(); ++i) persons.push_back("p" + std::to_string(i));
  for (std::size_t j = 0; j < rows.front().size(); ++j) items.push_back("i" + std::to_string(j));
  for (const auto& r : rows) {
    for (int v : r) cells.push_back(static_cast<std::uint8_t>(v));
  }
  return ResponseMatrix(persons, items, cells);
}

// Alpha straight from the definition, with population-free n-1 variances.
double alpha_by_hand(const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size(), k = rows.front().size();
  auto var = [n](const std::vector<double>& x) {
    const double m = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    double s = 0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(n - 1);
  };
  double item_var = 0;
  std::vector<double> totals(n, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<double> col;
    for (std::size_t i = 0; i < n; ++i) {
      col.push_back(rows[i][j]);
      totals[i] += rows[i][j];
    }
    item_var += var(col);
  }
  const double kk = static_cast<double>(k);
  return kk / (kk - 1) * (1 - item_var / var(totals));
}

std::vector<std::vector<int>> random_rows(std::mt19937_64& gen, std::size_t n, std::size_t k) {
  std::bernoulli_distribution coin(0.55);
  std::vector<std::vector<int>> rows(n, std::vector<int>(k));
  for (auto& r : rows) {
    for (int& v : r) v = coin(gen) ? 1 : 0;
  }
  return rows;
}

std::vector<double> spread(int n, double lo, double hi) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

}  // namespace

TEST_CASE("response matrix contracts") {
  CHECK_THROWS_AS(ResponseMatrix({"a"}, {"x", "y"}, {1, 0}), ContractViolation);
  CHECK_THROWS_AS(ResponseMatrix({"a", "b"}, {"x", "y"}, {1, 0, 1}), ContractViolation);
  CHECK_THROWS_AS(ResponseMatrix({"a", "a"}, {"x", "y"}, {1, 0, 1, 0}), ContractViolation);
  CHECK_THROWS_AS(ResponseMatrix({"a", "b"}, {"x", "y"}, {1, 0, 2, 0}), ContractViolation);
  const ResponseMatrix m = matrix({{1, 0, 1}, {0, 0, 1}});
  CHECK(m.person_totals() == std::vector<int>{2, 1});
  CHECK(m.item_totals() == std::vector<int>{1, 0, 2});
  const ResponseMatrix s = m.select_items({"i2", "i0"});
  CHECK(s.at(0, 0) == 1);
  CHECK(s.at(1, 1) == 0);
  CHECK_THROWS_AS(m.select_items({"nope", "i0"}), ContractViolation);
}

TEST_CASE("alpha on hand fixtures") {
  // Item variances 1/4, 1/3, 1/4; total variance 5/3.
  CHECK(cronbach_alpha(matrix({{1, 1, 1}, {1, 1, 0}, {1, 0, 0}, {0, 0, 0}})) == doctest::Approx(0.75).epsilon(1e-12));
  // Identical columns are perfectly consistent.
  CHECK(std::abs(cronbach_alpha(matrix({{1, 1, 1}, {0, 0, 0}, {1, 1, 1}, {1, 1, 1}, {0, 0, 0}})) - 1.0) < 1e-12);
  CHECK_THROWS_AS(cronbach_alpha(matrix({{1, 0}, {1, 0}, {1, 0}})), UndefinedStatistic);
  const ResponseMatrix m = matrix({{1, 1, 0}, {0, 1, 0}, {1, 1, 1}});
  CHECK_THROWS_AS(cronbach_alpha(m, std::vector<std::string>{"i0"}), ContractViolation);
}

TEST_CASE("alpha matches the definition and ignores order") {
  std::mt19937_64 gen(8);
  for (int t = 0; t < 200; ++t) {
    const auto rows = random_rows(gen, 5 + t % 30, 2 + t % 9);
    const ResponseMatrix m = matrix(rows);
    double direct;
    try {
      direct = cronbach_alpha(m);
    } catch (const UndefinedStatistic&) {
      continue;
    }
    CHECK(direct == doctest::Approx(alpha_by_hand(rows)).epsilon(1e-12));

    // Permuting persons and items leaves alpha unchanged.
    auto shuffled = rows;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    std::vector<std::string> ids = m.item_ids();
    std::shuffle(ids.begin(), ids.end(), gen);
    CHECK(cronbach_alpha(matrix(shuffled)) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(cronbach_alpha(m, ids) == doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("rasch probability") {
  CHECK(rasch_probability(0.7, 0.7) == doctest::Approx(0.5));
  CHECK(rasch_probability(1.0, 0.0) == doctest::Approx(1.0 / (1.0 + std::exp(-1.0))));
  CHECK(rasch_probability(800, 0) == 1.0);
  CHECK(rasch_probability(-800, 0) == 0.0);
  for (double x = -5; x <= 5; x += 0.5) {
    CHECK(rasch_probability(x, 0.3) + rasch_probability(-x, -0.3) == doctest::Approx(1.0));
  }
}

TEST_CASE("rasch recovers simulated parameters") {
  std::mt19937_64 gen(3);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> theta(500);
  for (double& t : theta) t = normal(gen);
  const std::vector<double> b = spread(21, -2.0, 2.0);
  const ResponseMatrix m = simulate_rasch(theta, b, 77);
  CHECK(m.persons() == 500);
  CHECK(m.item_ids().front() == "Q01");
  CHECK(m.person_ids().front() == "P0001");

  const RaschFit fit = rasch_fit(m);
  CHECK(fit.converged);
  CHECK(fit.iterations <= 100);
  CHECK(fit.extreme_items.empty());
  REQUIRE(fit.b.size() == 21);
  CHECK(std::abs(std::accumulate(fit.b.begin(), fit.b.end(), 0.0)) < 1e-9);

  double sxy = 0, sxx = 0, syy = 0, se = 0;
  for (std::size_t j = 0; j < 21; ++j) {
    sxy += fit.b[j] * b[j];
    sxx += fit.b[j] * fit.b[j];
    syy += b[j] * b[j];
    se += (fit.b[j] - b[j]) * (fit.b[j] - b[j]);
  }
  CHECK(sxy / std::sqrt(sxx * syy) >= 0.95);
  CHECK(std::sqrt(se / 21) <= 0.35);

  // Observed scores equal expected scores at the solution.
  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < m.persons(); ++i) row_of[m.person_ids()[i]] = i;
  double worst = 0;
  std::vector<double> item_expected(21, 0.0), item_observed(21, 0.0);
  for (std::size_t p = 0; p < fit.person_ids.size(); ++p) {
    const std::size_t row = row_of.at(fit.person_ids[p]);
    double expected = 0, observed = 0;
    for (std::size_t j = 0; j < 21; ++j) {
      const double pr = 1.0 / (1.0 + std::exp(fit.b[j] - fit.theta[p]));
      expected += pr;
      observed += m.at(row, j);
      item_expected[j] += pr;
      item_observed[j] += m.at(row, j);
    }
    worst = std::max(worst, std::abs(expected - observed));
  }
  for (std::size_t j = 0; j < 21; ++j) worst = std::max(worst, std::abs(item_expected[j] - item_observed[j]));
  CHECK(worst < 1e-4);
  CHECK(fit.max_score_residual < 1e-4);

  // Each sweep never lowers the joint likelihood.
  for (std::size_t i = 1; i < fit.log_likelihood.size(); ++i) {
    CHECK(fit.log_likelihood[i] >= fit.log_likelihood[i - 1] - 1e-9);
  }
  CHECK(fit.person_reliability > 0.5);
  CHECK(fit.person_reliability < 1.0);
  for (double s : fit.se_theta) CHECK(s > 0);
}

TEST_CASE("rasch structure") {
  // Two identical columns receive identical difficulties.
  std::mt19937_64 gen(12);
  auto rows = random_rows(gen, 60, 6);
  for (auto& r : rows) r[3] = r[1];
  const RaschFit fit = rasch_fit(matrix(rows));
  const auto at = [&](const std::string& id) {
    return fit.b[static_cast<std::size_t>(std::find(fit.item_ids.begin(), fit.item_ids.end(), id) - fit.item_ids.begin())];
  };
  CHECK(at("i1") == doctest::Approx(at("i3")).epsilon(1e-9));

  // Extremes are set aside, not estimated.
  auto with_extremes = random_rows(gen, 40, 5);
  with_extremes[0] = {1, 1, 1, 1, 1};
  with_extremes[1] = {0, 0, 0, 0, 0};
  for (auto& r : with_extremes) r.push_back(1);
  const RaschFit e = rasch_fit(matrix(with_extremes));
  CHECK(std::find(e.extreme_items.begin(), e.extreme_items.end(), "i5") != e.extreme_items.end());
  CHECK(std::find(e.extreme_persons.begin(), e.extreme_persons.end(), "p1") != e.extreme_persons.end());
  CHECK(std::find(e.item_ids.begin(), e.item_ids.end(), "i5") == e.item_ids.end());

  // Bias correction shrinks difficulties by (k-1)/k.
  const RaschFit plain = rasch_fit(matrix(rows));
  RaschOptions o;
  o.bias_correction = true;
  const RaschFit corrected = rasch_fit(matrix(rows), o);
  CHECK(corrected.bias_corrected);
  const double k = static_cast<double>(plain.b.size());
  for (std::size_t j = 0; j < plain.b.size(); ++j) {
    CHECK(corrected.b[j] == doctest::Approx(plain.b[j] * (k - 1) / k).epsilon(1e-9));
  }

  CHECK_THROWS_AS(rasch_fit(matrix({{1, 1}, {0, 0}, {1, 0}})), UndefinedStatistic);
}

TEST_CASE("icc and wright map") {
  const auto grid = default_theta_grid();
  REQUIRE(grid.size() == 81);
  CHECK(grid.front() == doctest::Approx(-4.0));
  CHECK(grid.back() == doctest::Approx(4.0));

  const auto c = icc(0.5);
  for (std::size_t i = 1; i < c.size(); ++i) CHECK(c[i].p > c[i - 1].p);
  const auto shifted = icc(1.5);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(shifted[i].p == doctest::Approx(rasch_probability(c[i].theta - 1.0, 0.5)));
  }

  RaschFit fit;
  fit.item_ids = {"a", "b", "c"};
  fit.b = {0.9, -1.2, 0.3};
  fit.person_ids = {"x", "y", "z", "w"};
  fit.theta = {-0.1, 2.3, -2.6, 0.4};
  const WrightMap w = wright_map(fit, 0.5);
  CHECK(w.items.size() == 3);
  CHECK(w.items[0].id == "b");
  CHECK(w.items[2].id == "a");
  int total = 0;
  for (std::size_t i = 0; i < w.bins.size(); ++i) {
    total += w.bins[i].persons;
    CHECK(w.bins[i].hi - w.bins[i].lo == doctest::Approx(0.5));
    if (i > 0) CHECK(w.bins[i].lo == doctest::Approx(w.bins[i - 1].hi));
  }
  CHECK(total == 4);
  CHECK(w.bins.front().lo <= -2.6);
  CHECK(w.bins.back().hi > 2.3);
}

TEST_CASE("pearson against reference values") {
  const CorrelationResult a = pearson({1, 2, 3, 4, 5}, {2, 4, 5, 4, 5});
  CHECK(a.r == doctest::Approx(0.7745966692414834).epsilon(1e-12));
  CHECK(a.p_two_sided == doctest::Approx(0.1240270626575546).epsilon(1e-10));
  CHECK(a.n == 5);

  const std::vector<double> x{2.1, 3.4, 1.9, 5.6, 4.4, 3.3, 2.8, 6.1};
  const std::vector<double> y{10.2, 12.9, 9.8, 15.1, 13.0, 12.2, 11.1, 14.8};
  const CorrelationResult b = pearson(x, y);
  CHECK(b.r == doctest::Approx(0.9702160841003027).epsilon(1e-12));
  CHECK(b.p_two_sided == doctest::Approx(6.458523842778856e-05).epsilon(1e-8));

  // Affine invariance and sign flip.
  std::vector<double> scaled, flipped;
  for (double v : y) scaled.push_back(3.0 * v - 7.0), flipped.push_back(-v);
  CHECK(pearson(x, scaled).r == doctest::Approx(b.r).epsilon(1e-12));
  CHECK(pearson(x, flipped).r == doctest::Approx(-b.r).epsilon(1e-12));
  CHECK(pearson(y, x).r == doctest::Approx(b.r).epsilon(1e-12));

  CHECK(pearson({1, 2, 3}, {2, 4, 6}).p_two_sided == 0.0);
  CHECK_THROWS_AS(pearson({1, 2}, {1, 2}), ContractViolation);
  CHECK_THROWS_AS(pearson({1, 2, 3}, {1, 2}), ContractViolation);
  CHECK_THROWS_AS(pearson({1, 1, 1}, {1, 2, 3}), UndefinedStatistic);
}

TEST_CASE("student t tails") {
  CHECK(student_t_two_sided_p(2.0, 10) == doctest::Approx(0.07338803477074039).epsilon(1e-10));
  CHECK(student_t_two_sided_p(-2.0, 10) == doctest::Approx(0.07338803477074039).epsilon(1e-10));
  CHECK(student_t_two_sided_p(3.5, 4.5) == doctest::Approx(0.02054168996938556).epsilon(1e-10));
  CHECK(student_t_two_sided_p(0.25, 120) == doctest::Approx(0.8030148302334259).epsilon(1e-10));
  CHECK(student_t_two_sided_p(0.0, 7) == doctest::Approx(1.0));
}

TEST_CASE("welch t-test") {
  const std::vector<double> a{3.1, 2.4, 4.8, 3.9, 5.2, 2.2};
  const std::vector<double> b{1.8, 2.9, 2.1, 1.1, 2.6, 1.5, 2.0, 2.4, 1.7};
  const WelchResult w = welch_t(a, b);
  CHECK(w.t == doctest::Approx(2.934730605451213).epsilon(1e-12));
  CHECK(w.df == doctest::Approx(6.380137765585368).epsilon(1e-12));
  CHECK(w.p_two_sided == doctest::Approx(0.02432377612974052).epsilon(1e-10));

  const WelchResult back = welch_t(b, a);
  CHECK(back.t == doctest::Approx(-w.t));
  CHECK(back.df == doctest::Approx(w.df));
  CHECK(back.p_two_sided == doctest::Approx(w.p_two_sided));

  const WelchResult same = welch_t({2, 2, 2}, {2, 2});
  CHECK(same.t == 0.0);
  CHECK(same.p_two_sided == 1.0);
  CHECK_THROWS_AS(welch_t({2, 2}, {3, 3}), UndefinedStatistic);
  CHECK_THROWS_AS(welch_t({2}, {3, 3}), ContractViolation);
}
