// Copyright 2026 The covlll Authors
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


// Acceptance suite. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails. Uses the public C API only.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "covlll/covlll.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Records the first failing check and keeps the rest as context.
class Checker {
 public:
  void Expect(bool condition, const std::string& what) {
    if (!condition && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  void Note(const std::string& text) {
    if (outcome_.pass) outcome_.detail = text;
  }
  Outcome Result() const { return outcome_; }

 private:
  Outcome outcome_;
};

std::string Take(char* s) {
  std::string out = s ? s : "";
  covlll_string_free(s);
  return out;
}

std::string Status(covlll_status status) {
  return std::string(covlll_status_name(status)) + ": " + covlll_last_error();
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0,
                double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c, d);
  return buf;
}

int Threads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct Published {
  int alpha, t, k;
  double value;
};

constexpr Published kPublished[] = {
    {2, 3, 0, 10.38},   {2, 3, 1, 9.64},    {2, 3, 2, 8.68},
    {2, 3, 3, 8.31},    {2, 4, 0, 32.22},   {2, 4, 1, 31.15},
    {2, 4, 2, 29.55},   {2, 4, 3, 28.85},   {3, 3, 0, 36.73},
    {3, 3, 1, 35.31},   {3, 3, 3, 33.28},   {3, 3, 5, 32.79},
    {3, 4, 0, 167.39},  {3, 4, 1, 165.3},   {3, 4, 3, 161.57},
    {3, 4, 5, 160.47},  {4, 3, 0, 88.03},   {4, 3, 2, 83.97},
    {4, 3, 4, 82.72},   {4, 3, 6, 82.27},   {4, 4, 0, 531.3},
    {4, 4, 2, 524.75},  {4, 4, 4, 521.98},  {4, 4, 6, 520.90},
    {5, 4, 0, 1298.61}, {5, 4, 2, 1290.12}, {5, 4, 4, 1286.46},
    {5, 4, 6, 1285.01}, {5, 5, 0, 8662.95}, {5, 5, 2, 8651.13},
    {5, 5, 4, 8644.67}, {5, 5, 6, 8641.86},
};

Outcome TableReproduction() {
  Checker check;
  char* raw = nullptr;
  covlll_status status = covlll_table_json(&raw);
  check.Expect(status == COVLLL_OK, Status(status));
  if (status != COVLLL_OK) return check.Result();
  json rows = json::parse(Take(raw));
  status = covlll_table_text(&raw);
  check.Expect(status == COVLLL_OK, Status(status));
  const std::string text = Take(raw);
  check.Expect(rows.size() == std::size(kPublished),
               "expected 32 rows, got " + std::to_string(rows.size()));
  double worst = 0;
  for (size_t i = 0; i < std::min(rows.size(), std::size(kPublished)); ++i) {
    const Published& want = kPublished[i];
    const json& row = rows[i];
    const std::string key = std::to_string(want.alpha) + " " +
                            std::to_string(want.t) + " " +
                            std::to_string(want.k);
    check.Expect(row["alpha"] == want.alpha && row["t"] == want.t &&
                     row["k"] == want.k,
                 "row " + std::to_string(i) + " is not " + key);
    const double got = row["coefficient"].get<double>();
    worst = std::max(worst, std::abs(got - want.value));
    check.Expect(std::abs(got - want.value) <= 0.005,
                 key + Fmt(": got %.4f want %.2f", got, want.value));
    check.Expect(text.find(key + Fmt(" %.2f\n", got)) != std::string::npos,
                 "text output lacks row " + key);
  }
  check.Note(Fmt("32 rows, max deviation %.4f", worst));
  return check.Result();
}

Outcome GammaOracleEquivalence() {
  Checker check;
  int compared = 0;
  int skipped = 0;
  bool minimum_covered = true;
  for (int alpha = 2; alpha <= 6; ++alpha) {
    for (int t = 2; t <= 6; ++t) {
      for (int k = 1; k <= 6; ++k) {
        char *enum_num = nullptr, *enum_den = nullptr;
        covlll_status status =
            covlll_enumerate_gamma(alpha, t, k, 10000000, &enum_num, &enum_den);
        const bool required = alpha <= 3 && t <= 3 && k <= 2;
        if (status == COVLLL_E_WORK_BOUND) {
          ++skipped;
          if (required) minimum_covered = false;
          continue;
        }
        const std::string key = Fmt("(%g,%g,%g)", alpha, t, k);
        check.Expect(status == COVLLL_OK, key + " enumerate " + Status(status));
        if (status != COVLLL_OK) continue;
        char *num = nullptr, *den = nullptr;
        status = covlll_gamma(alpha, t, k, &num, &den);
        check.Expect(status == COVLLL_OK, key + " gamma " + Status(status));
        if (status != COVLLL_OK) continue;
        const std::string a = Take(enum_num) + "/" + Take(enum_den);
        const std::string b = Take(num) + "/" + Take(den);
        check.Expect(a == b, key + ": enumerated " + a + " formula " + b);
        ++compared;
      }
    }
  }
  check.Expect(minimum_covered, "a required triple exceeded the work budget");
  check.Note(std::to_string(compared) + " triples equal, " +
             std::to_string(skipped) + " beyond the budget");
  return check.Result();
}

Outcome ClosedFormAtKOne() {
  Checker check;
  double worst = 0;
  for (int alpha = 2; alpha <= 6; ++alpha) {
    for (int t = 2; t <= 6; ++t) {
      const std::string key = Fmt("(%g,%g)", alpha, t);
      char *num = nullptr, *den = nullptr;
      covlll_status status = covlll_gamma(alpha, t, 1, &num, &den);
      check.Expect(status == COVLLL_OK, key + " " + Status(status));
      if (status != COVLLL_OK) continue;
      uint64_t power = 1;
      for (int i = 1; i < t; ++i) power *= alpha;
      const std::string got = Take(num) + "/" + Take(den);
      check.Expect(got == "1/" + std::to_string(power),
                   key + ": gamma_1 = " + got);
      double via_gamma = 0, closed = 0;
      check.Expect(covlll_coefficient(alpha, t, 1, &via_gamma) == COVLLL_OK &&
                       covlll_coefficient_closed_form(alpha, t, &closed) ==
                           COVLLL_OK,
                   key + " coefficient error");
      const double rel = std::abs(via_gamma - closed) / std::abs(closed);
      worst = std::max(worst, rel);
      check.Expect(rel < 5e-13, key + Fmt(": relative gap %.3g", rel));
    }
  }
  check.Note(Fmt("25 pairs, max relative gap %.2g", worst));
  return check.Result();
}

Outcome ImprovementOverBaseline() {
  Checker check;
  double smallest_gain = INFINITY;
  for (int alpha = 2; alpha <= 6; ++alpha) {
    for (int t = 2; t <= 6; ++t) {
      double tiled = 0, baseline = 0;
      check.Expect(covlll_coefficient(alpha, t, 1, &tiled) == COVLLL_OK &&
                       covlll_coefficient(alpha, t, 0, &baseline) == COVLLL_OK,
                   "coefficient error " + std::string(covlll_last_error()));
      check.Expect(tiled < baseline,
                   Fmt("(%g,%g): tiled %.6f >= baseline %.6f", alpha, t,
                       tiled, baseline));
      smallest_gain = std::min(smallest_gain, (baseline - tiled) / baseline);
    }
  }
  check.Note(Fmt("25 pairs, smallest relative gain %.3g", smallest_gain));
  return check.Result();
}

Outcome MonotoneInK() {
  Checker check;
  std::map<std::pair<int, int>, std::vector<int>> listed;
  for (const Published& row : kPublished) {
    listed[{row.alpha, row.t}].push_back(row.k);
  }
  for (const auto& [key, ks] : listed) {
    double previous = INFINITY;
    for (int k : ks) {
      double value = 0;
      check.Expect(covlll_coefficient(key.first, key.second, k, &value) ==
                       COVLLL_OK,
                   "coefficient error " + std::string(covlll_last_error()));
      check.Expect(value < previous,
                   Fmt("(%g,%g): k=%g gives %.6f, not below previous",
                       key.first, key.second, k, value));
      previous = value;
    }
  }
  check.Note(std::to_string(listed.size()) + " (alpha,t) groups decrease");
  return check.Result();
}

Outcome LambdaValidation() {
  Checker check;
  struct Case {
    int alpha, t, k, n_core;
  };
  const Case cases[] = {{2, 3, 1, 8}, {2, 3, 2, 8}, {3, 3, 1, 9}};
  std::string detail;
  for (const Case& c : cases) {
    covlll_estimate est{};
    covlll_status status = covlll_estimate_lambda(
        c.t, c.alpha, c.k, c.n_core, 1000000, 20260101, Threads(), &est);
    check.Expect(status == COVLLL_OK, Status(status));
    if (status != COVLLL_OK) continue;
    // Independent exact value (1 - gamma)^(n/(k alpha)) from the rational.
    char *num = nullptr, *den = nullptr;
    covlll_gamma(c.alpha, c.t, c.k, &num, &den);
    const double gamma = std::stod(Take(num)) / std::stod(Take(den));
    const double exact =
        std::pow(1.0 - gamma, c.n_core / static_cast<double>(c.k * c.alpha));
    const double sigma = std::sqrt(exact * (1 - exact) / est.trials);
    const double z = (est.estimate - exact) / sigma;
    const std::string key = Fmt("(%g,%g,%g,%g)", c.alpha, c.t, c.k, c.n_core);
    check.Expect(std::abs(est.exact - exact) < 1e-12,
                 key + " reported exact value differs");
    check.Expect(std::abs(z) <= 4.0, key + Fmt(": z = %.2f", z));
    detail += (detail.empty() ? "" : ", ") + key + Fmt(" z=%.2f", z);
  }
  check.Note(detail);
  return check.Result();
}

Outcome EndToEndConstruction() {
  Checker check;
  struct Case {
    int m, t, alpha, k;
  };
  const Case cases[] = {{5, 2, 2, 1}, {8, 2, 2, 1}, {6, 3, 2, 1}, {6, 3, 2, 2}};
  std::string detail;
  for (const Case& c : cases) {
    const std::string key = Fmt("(%g,%g,%g,%g)", c.m, c.t, c.alpha, c.k);
    int64_t n = 0;
    covlll_status status = covlll_sufficient_n(c.m, c.t, c.alpha, c.k,
                                               COVLLL_DEGREE_EXACT, &n);
    check.Expect(status == COVLLL_OK, key + " " + Status(status));
    if (status != COVLLL_OK) continue;
    int successes = 0;
    uint64_t resamples = 0;
    for (uint64_t seed = 1; seed <= 20; ++seed) {
      covlll_matrix* matrix = nullptr;
      char* log = nullptr;
      status = covlll_construct(c.m, c.t, c.alpha, c.k, n, seed, 0, 0, &matrix,
                                &log);
      const std::string log_text = Take(log);
      if (status != COVLLL_OK) {
        check.Expect(false, key + Fmt(" seed %g: ", seed) + Status(status));
        continue;
      }
      resamples += json::parse(log_text)["resample_count"].get<uint64_t>();
      int hashed = 0, naive = 0;
      check.Expect(covlll_verify(matrix, c.t, 0, &hashed) == COVLLL_OK &&
                       covlll_verify(matrix, c.t, 1, &naive) == COVLLL_OK,
                   key + " verify error");
      check.Expect(covlll_matrix_cols(matrix) == n,
                   key + " output width differs from sufficient_n");
      check.Expect(hashed == 1 && naive == 1,
                   key + Fmt(" seed %g output is not covering", seed));
      if (hashed == 1 && naive == 1) ++successes;
      covlll_matrix_free(matrix);
    }
    detail += (detail.empty() ? "" : ", ") + key +
              Fmt(" n=%g %g/20 mean resamples %.1f", n, successes,
                  resamples / 20.0);
  }
  check.Note(detail);
  return check.Result();
}

using Entries = std::vector<int>;

covlll_matrix* Build(int m, int n, int alpha, const Entries& entries) {
  covlll_matrix* out = nullptr;
  covlll_matrix_from_entries(m, n, alpha, entries.data(), &out);
  return out;
}

// Column witnesses of every (row set, vector), computed directly.
std::vector<std::vector<int>> Witnesses(int m, int n, int alpha, int t,
                                        const Entries& e,
                                        std::vector<int>* first_rows) {
  std::vector<std::vector<int>> out;
  std::vector<int> rows(t);
  std::function<void(int, int)> rec = [&](int depth, int start) {
    if (depth == t) {
      int vectors = 1;
      for (int i = 0; i < t; ++i) vectors *= alpha;
      std::vector<std::vector<int>> by_vector(vectors);
      for (int col = 0; col < n; ++col) {
        int index = 0;
        for (int r : rows) index = index * alpha + (e[r * n + col] - 1);
        by_vector[index].push_back(col);
      }
      for (auto& w : by_vector) out.push_back(std::move(w));
      if (first_rows) first_rows->push_back(rows[0]);
      return;
    }
    for (int r = start; r < m; ++r) {
      rows[depth] = r;
      rec(depth + 1, r + 1);
    }
  };
  rec(0, 0);
  return out;
}

Entries DropColumn(int m, int n, const Entries& e, int col) {
  Entries out;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c != col) out.push_back(e[r * n + c]);
    }
  }
  return out;
}

bool Covers(covlll_matrix* matrix, int t, bool naive) {
  int covering = -1;
  covlll_verify(matrix, t, naive ? 1 : 0, &covering);
  return covering == 1;
}

Outcome VerifierSoundness() {
  Checker check;
  std::mt19937_64 rng(8);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  int covering = 0, agreed = 0, deletions = 0, retained = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int t = uniform(1, 3);
    const int m = uniform(t, 8);
    const int alpha = uniform(2, 3);
    const int n = uniform(1, 40);
    Entries e(static_cast<size_t>(m) * n);
    for (int& v : e) v = uniform(1, alpha);
    covlll_matrix* matrix = Build(m, n, alpha, e);
    check.Expect(matrix != nullptr, "matrix construction failed");
    if (!matrix) continue;
    const bool hashed = Covers(matrix, t, false);
    const bool naive = Covers(matrix, t, true);
    covlll_matrix_free(matrix);
    auto witnesses = Witnesses(m, n, alpha, t, e, nullptr);
    const bool truth = std::all_of(witnesses.begin(), witnesses.end(),
                                   [](const auto& w) { return !w.empty(); });
    check.Expect(hashed == naive && hashed == truth,
                 Fmt("trial %g: hashed %g naive %g direct %g", trial, hashed,
                     naive, truth));
    if (hashed == naive) ++agreed;
    if (!truth || n < 2) continue;
    ++covering;
    // Deleting a column breaks coverage exactly when it is a unique witness.
    std::vector<bool> unique(n, false);
    for (const auto& w : witnesses) {
      if (w.size() == 1) unique[w[0]] = true;
    }
    for (int col = 0; col < n; ++col) {
      const bool expect_cover = !unique[col];
      covlll_matrix* smaller =
          Build(m, n - 1, alpha, DropColumn(m, n, e, col));
      const bool h = Covers(smaller, t, false);
      const bool v = Covers(smaller, t, true);
      covlll_matrix_free(smaller);
      check.Expect(h == expect_cover && v == expect_cover,
                   Fmt("trial %g: deleting column %g gave %g, expected %g",
                       trial, col, h, expect_cover));
      if (expect_cover) {
        ++retained;
      } else {
        ++deletions;
      }
    }
  }
  check.Expect(deletions >= 100, "too few unique-witness deletions exercised");
  check.Note(std::to_string(agreed) + "/1000 agree (" +
             std::to_string(covering) + " covering), " +
             std::to_string(deletions) + " unique-witness deletions flipped, " +
             std::to_string(retained) + " redundant deletions kept coverage");
  return check.Result();
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"table reproduction", 1.0, TableReproduction},
      {"gamma oracle equivalence", 60.0, GammaOracleEquivalence},
      {"k=1 closed form", 0, ClosedFormAtKOne},
      {"improvement over baseline", 0, ImprovementOverBaseline},
      {"monotone in k", 0, MonotoneInK},
      {"lambda validation", 120.0, LambdaValidation},
      {"end-to-end construction", 300.0, EndToEndConstruction},
      {"verifier soundness", 0, VerifierSoundness},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.pass = false;
      outcome.detail = Fmt("took %.2f s, limit %.0f s; ", seconds,
                           c.limit_seconds) +
                       outcome.detail;
    }
    if (!outcome.pass) ++failures;
    std::printf("%s [%d] %s (%.2f s): %s\n", outcome.pass ? "PASS" : "FAIL",
                index, c.name, seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
