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

// Lovász-Local-Lemma upper bounds on the minimal covering-array size
// N(m, t, alpha) under the i.i.d. model and the tiled model.
//
// The tiled model fills every row with consecutive 1 x (k*alpha) tiles, each
// an independent uniform arrangement of k copies of every letter. For a fixed
// set of t rows and a fixed vector z, gamma_k is the probability that z shows
// up in some column of one vertical stack of t tiles; the vector is then
// missing from the whole row set with probability (1 - gamma_k)^(n / k alpha).
//
// k = 0 everywhere in this header selects the i.i.d. model (one uniform letter
// per cell, no augmentation columns).

#ifndef COVLLL_SRC_BOUNDS_H_
#define COVLLL_SRC_BOUNDS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "exact_arith.h"

namespace covlll {

struct CoveringParams {
  int m = 0;      // rows
  int t = 0;      // strength
  int alpha = 0;  // alphabet size

  // Bound computations need t >= 2; the verifier accepts t = 1.
  void ValidateForBounds() const;
};

// How d + 1 is bounded: kExact uses t*C(m-1, t-1) + 1, kRelaxed the looser
// t*m^(t-1)/(t-1)!.
enum class DegreeMode { kExact, kRelaxed };

// Interface names used by the CLI and JSON reports: "exact" and "paper".
const char* DegreeModeName(DegreeMode mode);
DegreeMode ParseDegreeMode(const std::string& name);

enum class GammaForm { kBinomial, kMultinomial };

ExactRational GammaK(int alpha, int t, int k);

// Signed i-th inclusion-exclusion term of gamma_k, already divided by the
// common denominator. Both forms must produce identical terms.
ExactRational GammaTerm(int alpha, int t, int k, int i, GammaForm form);

// Multiplier of log2(m) in the i.i.d. bound: (t-1) / log2(a^t / (a^t - 1)).
double CoefficientBaseline(int alpha, int t);

// Multiplier of log2(m) in the tiled bound: k a (t-1) / log2(1 / (1-gamma_k)).
double CoefficientTiled(int alpha, int t, int k);

// k = 1 closed form a (t-1) / log2(a^(t-1) / (a^(t-1) - 1)), evaluated
// without going through gamma.
double CoefficientTiledClosedForm(int alpha, int t);

// Dispatches on k: 0 -> baseline, otherwise tiled.
double Coefficient(int alpha, int t, int k);

ExactInteger DependencyDegreePlusOneExact(int m, int t);
double DependencyDegreePlusOneRelaxed(int m, int t);
ExactRational DependencyDegreePlusOne(int m, int t, DegreeMode mode);

struct LllResult {
  bool satisfied = false;
  double product = 0.0;  // e * p * (d+1)
};

// n counts core columns only (no augmentation) and must be a positive
// multiple of k*alpha (of 1 when k = 0).
LllResult LllCheck(const CoveringParams& params, int k, int64_t n,
                   DegreeMode mode);

// Continuous n at which e*p*(d+1) = 1, core columns only.
double ThresholdN(const CoveringParams& params, int k, DegreeMode mode);

struct BoundReport {
  CoveringParams params;
  int k = 0;
  DegreeMode mode = DegreeMode::kExact;
  double coefficient = 0.0;
  int64_t core_n = 0;
  int64_t sufficient_n = 0;  // core_n + augmentation_columns
  ExactRational gamma;
  ExactRational p_bound;  // at core_n
  ExactRational dependency_degree_plus_one;
  double lll_product = 0.0;
  int augmentation_columns = 0;
};

// Smallest core width passing LllCheck, plus the alpha constant columns.
BoundReport SufficientN(const CoveringParams& params, int k, DegreeMode mode);

struct TableRow {
  int alpha = 0;
  int t = 0;
  int k = 0;
  double coefficient = 0.0;
};

// The 32 published (alpha, t, k) triples, values recomputed.
std::vector<TableRow> ReferenceTable();

// One "alpha t k value" line per row, value to 2 decimals, with header.
std::string FormatTable(const std::vector<TableRow>& rows);

}  // namespace covlll

#endif  // COVLLL_SRC_BOUNDS_H_
