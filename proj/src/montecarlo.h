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

// Independent oracles for the tiled model: exhaustive enumeration of gamma_k,
// seeded Monte-Carlo estimates of gamma_k and lambda_k, and the empirical
// smallest covering width.
//
// Trials are split into a fixed number of chunks, each with its own derived
// seed, so results do not depend on the thread count.

#ifndef COVLLL_SRC_MONTECARLO_H_
#define COVLLL_SRC_MONTECARLO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bounds.h"
#include "exact_arith.h"

namespace covlll {

inline constexpr uint64_t kDefaultWorkBound = 10'000'000;
inline constexpr const char* kWorkBoundEnv = "COVLLL_WORK_BOUND";

// kDefaultWorkBound unless COVLLL_WORK_BOUND holds a positive integer.
uint64_t DefaultWorkBound();

struct EstimateReport {
  uint64_t trials = 0;
  uint64_t hits = 0;
  double estimate = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/trials) at the estimate
  std::optional<ExactRational> exact;
  double z = 0.0;  // (estimate - exact) / std_error
};

// Counts, over every t-tuple of tile arrangements, those in which the vector
// <1,...,1> appears in some column. Throws kWorkBound when C(ak,k)^t or the
// number of arrangements per tile exceeds `work_bound`.
ExactRational EnumerateGamma(int alpha, int t, int k, uint64_t work_bound);
ExactRational EnumerateGamma(int alpha, int t, int k);

// Empirical P(target present in a stack of t random tiles). The target
// defaults to <1,...,1>.
EstimateReport EstimateGamma(int alpha, int t, int k, uint64_t trials,
                             uint64_t seed,
                             const std::vector<int>& target = {},
                             int threads = 1);

// Empirical P(<1,...,1> absent from t tiled rows of width n_core), compared
// with (1 - gamma_k)^(n_core / k alpha).
EstimateReport EstimateLambda(const CoveringParams& params, int k, int n_core,
                              uint64_t trials, uint64_t seed, int threads = 1);

struct MinNSummary {
  std::vector<int64_t> samples;  // total widths incl. augmentation, per trial
  int64_t min = 0;
  int64_t median = 0;  // lower median
  int64_t max = 0;
  int64_t sufficient_n = 0;
  uint64_t trials_above_bound = 0;
};

// Grows each trial's tiled, augmented matrix one tile column at a time until
// it covers. Needs C(m,t) * alpha^t <= 10^6.
MinNSummary EmpiricalMinN(const CoveringParams& params, int k, uint64_t trials,
                          uint64_t seed);

std::string EstimateCsvHeader();
// `exact` is written as a decimal; NaN leaves the field empty.
std::string EstimateCsvRow(const std::string& quantity, int m, int t,
                           int alpha, int k, int n_core, uint64_t trials,
                           double estimate, double std_error, double exact,
                           double z);

}  // namespace covlll

#endif  // COVLLL_SRC_MONTECARLO_H_
