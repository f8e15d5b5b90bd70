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

#include "bounds.h"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "error.h"

namespace covlll {
namespace {

// Margins closer to zero than this are settled in exact arithmetic.
constexpr double kLogMarginGuard = 1e-12;

void CheckAlphabetAndK(int alpha, int k) {
  if (alpha < 2) ThrowInvalid("alpha must be >= 2");
  if (k < 0) ThrowInvalid("k must be >= 0");
}

// Everything the LLL condition needs about one probability model.
struct ModelTerms {
  ExactRational gamma;       // P(vector present in one block)
  int64_t block_width = 1;   // columns per independent block
  ExactInteger bad_vectors;  // vectors that must be covered at random
  int augmentation = 0;      // constant columns added afterwards
};

ModelTerms TermsFor(const CoveringParams& params, int k) {
  ModelTerms terms;
  ExactInteger alpha_t = Pow(ExactInteger(params.alpha), params.t);
  if (k == 0) {
    terms.gamma = MakeRational(1, alpha_t);
    terms.block_width = 1;
    terms.bad_vectors = alpha_t;
    terms.augmentation = 0;
  } else {
    terms.gamma = GammaK(params.alpha, params.t, k);
    terms.block_width = static_cast<int64_t>(k) * params.alpha;
    terms.bad_vectors = alpha_t - params.alpha;
    terms.augmentation = params.alpha;
  }
  return terms;
}

// Natural log of (1 - gamma), accurate for tiny gamma.
double LogMiss(const ExactRational& gamma) {
  return std::log1p(-ToDouble(gamma));
}

// Rational enclosure [lo, hi] of Euler's number from the Taylor series.
const std::array<ExactRational, 2>& EulerBracket() {
  static const std::array<ExactRational, 2> bracket = [] {
    constexpr int kTerms = 40;
    ExactRational sum = 0;
    ExactInteger fact = 1;
    for (int j = 0; j < kTerms; ++j) {
      if (j > 0) fact *= j;
      sum += MakeRational(1, fact);
    }
    // Tail after kTerms terms is below 2 / kTerms!.
    ExactRational tail = MakeRational(2, fact * kTerms);
    return std::array<ExactRational, 2>{sum, ExactRational(sum + tail)};
  }();
  return bracket;
}

LllResult CheckBlocks(const ModelTerms& terms, const ExactRational& degree,
                      int64_t blocks) {
  double log_margin = 1.0 + Log2(terms.bad_vectors) * std::numbers::ln2 +
                      static_cast<double>(blocks) * LogMiss(terms.gamma) +
                      Log2(degree) * std::numbers::ln2;
  LllResult result;
  result.product = std::exp(log_margin);
  if (std::abs(log_margin) >= kLogMarginGuard) {
    result.satisfied = log_margin <= 0.0;
    return result;
  }
  ExactRational miss = 1 - terms.gamma;
  ExactRational without_e = ExactRational(terms.bad_vectors) *
                            RationalPow(miss, static_cast<uint64_t>(blocks)) *
                            degree;
  const auto& e = EulerBracket();
  if (without_e * e[1] <= 1) {
    result.satisfied = true;
  } else if (without_e * e[0] > 1) {
    result.satisfied = false;
  } else {
    result.satisfied = log_margin <= 0.0;
  }
  return result;
}

}  // namespace

void CoveringParams::ValidateForBounds() const {
  if (t < 2) ThrowInvalid("t must be >= 2 for bound computations");
  if (alpha < 2) ThrowInvalid("alpha must be >= 2");
  if (m < t) ThrowInvalid("m must be >= t");
}

const char* DegreeModeName(DegreeMode mode) {
  return mode == DegreeMode::kExact ? "exact" : "paper";
}

DegreeMode ParseDegreeMode(const std::string& name) {
  if (name == "exact") return DegreeMode::kExact;
  if (name == "paper") return DegreeMode::kRelaxed;
  ThrowInvalid("unknown mode '" + name + "' (expected exact or paper)");
}

ExactRational GammaTerm(int alpha, int t, int k, int i, GammaForm form) {
  CheckAlphabetAndK(alpha, k);
  if (k < 1) ThrowInvalid("gamma_k needs k >= 1");
  if (t < 1) ThrowInvalid("t must be >= 1");
  if (i < 1 || i > k) ThrowInvalid("term index out of range");
  const int64_t width = static_cast<int64_t>(alpha) * k;
  ExactInteger numerator;
  ExactInteger denominator;
  if (form == GammaForm::kBinomial) {
    numerator = Binomial(width, i) * Pow(Binomial(width - i, k - i), t);
    denominator = Pow(Binomial(width, k), t);
  } else {
    std::vector<int64_t> parts(alpha, k);
    ExactInteger whole = Multinomial(width, parts);
    parts[0] = k - i;
    ExactInteger rest = Multinomial(width - i, parts);
    numerator = Binomial(width, i) * Pow(rest, t);
    denominator = Pow(whole, t);
  }
  if (i % 2 == 0) numerator = -numerator;
  return MakeRational(numerator, denominator);
}

ExactRational GammaK(int alpha, int t, int k) {
  CheckAlphabetAndK(alpha, k);
  if (k < 1) ThrowInvalid("gamma_k needs k >= 1");
  if (t < 1) ThrowInvalid("t must be >= 1");
  const int64_t width = static_cast<int64_t>(alpha) * k;
  ExactInteger sum = 0;
  for (int i = 1; i <= k; ++i) {
    ExactInteger term = Binomial(width, i) * Pow(Binomial(width - i, k - i), t);
    if (i % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return MakeRational(sum, Pow(Binomial(width, k), t));
}

double CoefficientBaseline(int alpha, int t) {
  if (alpha < 2) ThrowInvalid("alpha must be >= 2");
  if (t < 2) ThrowInvalid("t must be >= 2");
  // log2(x / (x - 1)) = log1p(1 / (x - 1)) / ln 2 with x = alpha^t.
  const double x = std::pow(static_cast<double>(alpha), t);
  return (t - 1) * std::numbers::ln2 / std::log1p(1.0 / (x - 1.0));
}

double CoefficientTiled(int alpha, int t, int k) {
  if (k < 1) ThrowInvalid("tiled coefficient needs k >= 1");
  if (t < 2) ThrowInvalid("t must be >= 2");
  ExactRational gamma = GammaK(alpha, t, k);
  return static_cast<double>(k) * alpha * (t - 1) * std::numbers::ln2 /
         -LogMiss(gamma);
}

double CoefficientTiledClosedForm(int alpha, int t) {
  if (alpha < 2) ThrowInvalid("alpha must be >= 2");
  if (t < 2) ThrowInvalid("t must be >= 2");
  const double x = std::pow(static_cast<double>(alpha), t - 1);
  return alpha * (t - 1) * std::numbers::ln2 / std::log1p(1.0 / (x - 1.0));
}

double Coefficient(int alpha, int t, int k) {
  CheckAlphabetAndK(alpha, k);
  return k == 0 ? CoefficientBaseline(alpha, t) : CoefficientTiled(alpha, t, k);
}

ExactInteger DependencyDegreePlusOneExact(int m, int t) {
  if (t < 2 || m < t) ThrowInvalid("dependency degree needs 2 <= t <= m");
  return ExactInteger(t) * Binomial(m - 1, t - 1) + 1;
}

double DependencyDegreePlusOneRelaxed(int m, int t) {
  return ToDouble(DependencyDegreePlusOne(m, t, DegreeMode::kRelaxed));
}

ExactRational DependencyDegreePlusOne(int m, int t, DegreeMode mode) {
  if (t < 2 || m < t) ThrowInvalid("dependency degree needs 2 <= t <= m");
  if (mode == DegreeMode::kExact) {
    return ExactRational(DependencyDegreePlusOneExact(m, t));
  }
  return MakeRational(ExactInteger(t) * Pow(ExactInteger(m), t - 1),
                      Factorial(t - 1));
}

LllResult LllCheck(const CoveringParams& params, int k, int64_t n,
                   DegreeMode mode) {
  params.ValidateForBounds();
  CheckAlphabetAndK(params.alpha, k);
  ModelTerms terms = TermsFor(params, k);
  if (n <= 0) ThrowInvalid("n must be positive");
  if (n % terms.block_width != 0) {
    ThrowInvalid("n = " + std::to_string(n) + " is not a multiple of k*alpha = " +
                 std::to_string(terms.block_width));
  }
  return CheckBlocks(terms, DependencyDegreePlusOne(params.m, params.t, mode),
                     n / terms.block_width);
}

double ThresholdN(const CoveringParams& params, int k, DegreeMode mode) {
  params.ValidateForBounds();
  CheckAlphabetAndK(params.alpha, k);
  ModelTerms terms = TermsFor(params, k);
  ExactRational degree = DependencyDegreePlusOne(params.m, params.t, mode);
  double numerator = 1.0 + Log2(terms.bad_vectors) * std::numbers::ln2 +
                     Log2(degree) * std::numbers::ln2;
  return static_cast<double>(terms.block_width) * numerator /
         -LogMiss(terms.gamma);
}

BoundReport SufficientN(const CoveringParams& params, int k, DegreeMode mode) {
  params.ValidateForBounds();
  CheckAlphabetAndK(params.alpha, k);
  ModelTerms terms = TermsFor(params, k);
  ExactRational degree = DependencyDegreePlusOne(params.m, params.t, mode);

  // Start just below the continuous threshold, then settle by evaluation.
  const double threshold = ThresholdN(params, k, mode);
  int64_t blocks = static_cast<int64_t>(
      std::ceil(threshold / static_cast<double>(terms.block_width)));
  blocks = std::max<int64_t>(1, blocks - 2);
  while (!CheckBlocks(terms, degree, blocks).satisfied) ++blocks;
  while (blocks > 1 && CheckBlocks(terms, degree, blocks - 1).satisfied) {
    --blocks;
  }

  BoundReport report;
  report.params = params;
  report.k = k;
  report.mode = mode;
  report.coefficient = Coefficient(params.alpha, params.t, k);
  report.core_n = blocks * terms.block_width;
  report.augmentation_columns = terms.augmentation;
  report.sufficient_n = report.core_n + terms.augmentation;
  report.gamma = terms.gamma;
  report.p_bound = ExactRational(terms.bad_vectors) *
                   RationalPow(1 - terms.gamma, static_cast<uint64_t>(blocks));
  report.dependency_degree_plus_one = degree;
  report.lll_product = CheckBlocks(terms, degree, blocks).product;
  return report;
}

std::vector<TableRow> ReferenceTable() {
  static constexpr std::array<std::array<int, 3>, 32> kTriples = {{
      {2, 3, 0}, {2, 3, 1}, {2, 3, 2}, {2, 3, 3},
      {2, 4, 0}, {2, 4, 1}, {2, 4, 2}, {2, 4, 3},
      {3, 3, 0}, {3, 3, 1}, {3, 3, 3}, {3, 3, 5},
      {3, 4, 0}, {3, 4, 1}, {3, 4, 3}, {3, 4, 5},
      {4, 3, 0}, {4, 3, 2}, {4, 3, 4}, {4, 3, 6},
      {4, 4, 0}, {4, 4, 2}, {4, 4, 4}, {4, 4, 6},
      {5, 4, 0}, {5, 4, 2}, {5, 4, 4}, {5, 4, 6},
      {5, 5, 0}, {5, 5, 2}, {5, 5, 4}, {5, 5, 6},
  }};
  std::vector<TableRow> rows;
  rows.reserve(kTriples.size());
  for (const auto& [alpha, t, k] : kTriples) {
    rows.push_back({alpha, t, k, Coefficient(alpha, t, k)});
  }
  return rows;
}

std::string FormatTable(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "alpha t k N/log2(m)\n";
  char buf[64];
  for (const TableRow& row : rows) {
    std::snprintf(buf, sizeof(buf), "%d %d %d %.2f\n", row.alpha, row.t, row.k,
                  row.coefficient);
    out << buf;
  }
  return out.str();
}

}  // namespace covlll
