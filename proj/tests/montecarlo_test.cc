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

#include "montecarlo.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "error.h"
#include "gtest/gtest.h"

namespace covlll {
namespace {

TEST(EnumerateGammaTest, Examples) {
  EXPECT_EQ(EnumerateGamma(2, 3, 1), MakeRational(2, 8));
  EXPECT_EQ(EnumerateGamma(2, 3, 2), MakeRational(102, 216));
  EXPECT_EQ(EnumerateGamma(2, 2, 2), GammaK(2, 2, 2));
}

TEST(EnumerateGammaTest, EqualsInclusionExclusionWithinBudget) {
  int compared = 0;
  for (int alpha = 2; alpha <= 4; ++alpha) {
    for (int t = 1; t <= 4; ++t) {
      for (int k = 1; k <= 3; ++k) {
        try {
          ExactRational enumerated = EnumerateGamma(alpha, t, k, 2'000'000);
          EXPECT_EQ(enumerated, GammaK(alpha, t, k))
              << alpha << " " << t << " " << k;
          ++compared;
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kWorkBound);
        }
      }
    }
  }
  EXPECT_GE(compared, 24);
}

TEST(EnumerateGammaTest, WorkBound) {
  try {
    EnumerateGamma(4, 4, 3, 1000);
    FAIL() << "expected work-bound error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kWorkBound);
  }
  EXPECT_THROW(EnumerateGamma(2, 3, 0, 1000), Error);
}

TEST(EnumerateGammaTest, EnvironmentOverridesDefaultBound) {
  ::setenv(kWorkBoundEnv, "5", 1);
  EXPECT_EQ(DefaultWorkBound(), 5u);
  EXPECT_THROW(EnumerateGamma(2, 3, 2), Error);
  ::setenv(kWorkBoundEnv, "garbage", 1);
  EXPECT_EQ(DefaultWorkBound(), kDefaultWorkBound);
  ::unsetenv(kWorkBoundEnv);
  EXPECT_EQ(DefaultWorkBound(), kDefaultWorkBound);
}

TEST(EstimateGammaTest, SingleCopyBinary) {
  EstimateReport r = EstimateGamma(2, 3, 1, 1'000'000, 1);
  ASSERT_TRUE(r.exact.has_value());
  EXPECT_EQ(*r.exact, MakeRational(1, 4));
  EXPECT_LE(std::abs(r.estimate - 0.25), 4 * r.std_error);
  EXPECT_LE(std::abs(r.z), 4.0);
  EXPECT_DOUBLE_EQ(r.std_error,
                   std::sqrt(r.estimate * (1 - r.estimate) / 1'000'000));
}

TEST(EstimateGammaTest, TernaryTwoCopies) {
  EstimateReport r = EstimateGamma(3, 3, 2, 1'000'000, 2);
  EXPECT_LE(std::abs(r.estimate - ToDouble(GammaK(3, 3, 2))), 4 * r.std_error);
}

TEST(EstimateGammaTest, SingleTrialIsZeroOrOne) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    EstimateReport r = EstimateGamma(2, 3, 2, 1, seed);
    EXPECT_TRUE(r.estimate == 0.0 || r.estimate == 1.0);
    EXPECT_EQ(r.trials, 1u);
  }
}

TEST(EstimateGammaTest, IndependentOfThreadCount) {
  EstimateReport one = EstimateGamma(3, 2, 2, 200'000, 9, {}, 1);
  EstimateReport four = EstimateGamma(3, 2, 2, 200'000, 9, {}, 4);
  EXPECT_EQ(one.hits, four.hits);
}

TEST(EstimateGammaTest, EveryTargetVectorIsEquallyLikely) {
  const EstimateReport base = EstimateGamma(3, 3, 2, 400'000, 21);
  for (const std::vector<int>& target :
       {std::vector<int>{1, 2, 3}, std::vector<int>{3, 3, 1},
        std::vector<int>{2, 2, 2}}) {
    EstimateReport r = EstimateGamma(3, 3, 2, 400'000, 22, target);
    double sigma = std::hypot(r.std_error, base.std_error);
    EXPECT_LE(std::abs(r.estimate - base.estimate), 4 * sigma);
    EXPECT_LE(std::abs(r.z), 4.0);
  }
  EXPECT_THROW(EstimateGamma(3, 3, 2, 10, 1, {1, 2}), Error);
  EXPECT_THROW(EstimateGamma(3, 3, 2, 10, 1, {1, 2, 4}), Error);
  EXPECT_THROW(EstimateGamma(3, 3, 2, 0, 1), Error);
}

TEST(EstimateLambdaTest, MatchesExactMissProbability) {
  EstimateReport single = EstimateLambda({2, 2, 2}, 1, 2, 1'000'000, 1);
  EXPECT_EQ(*single.exact, MakeRational(1, 2));
  EXPECT_LE(std::abs(single.z), 4.0);

  EstimateReport four_tiles = EstimateLambda({3, 3, 2}, 1, 8, 1'000'000, 2);
  EXPECT_EQ(*four_tiles.exact, MakeRational(81, 256));
  EXPECT_NEAR(ToDouble(*four_tiles.exact), 0.3164, 1e-4);
  EXPECT_LE(std::abs(four_tiles.z), 4.0);
}

TEST(EstimateLambdaTest, VanishesForWideRows) {
  EstimateReport r = EstimateLambda({3, 3, 2}, 1, 400, 20'000, 3);
  EXPECT_EQ(r.estimate, 0.0);
  EXPECT_LT(ToDouble(*r.exact), 1e-20);
}

TEST(EstimateLambdaTest, RejectsNonDivisibleWidth) {
  EXPECT_THROW(EstimateLambda({3, 3, 2}, 2, 6, 10, 1), Error);
  EXPECT_THROW(EstimateLambda({3, 3, 2}, 1, 0, 10, 1), Error);
}

TEST(EmpiricalMinNTest, MedianWithinLllWidth) {
  MinNSummary s = EmpiricalMinN({8, 2, 2}, 1, 50, 1);
  EXPECT_EQ(s.samples.size(), 50u);
  EXPECT_LE(s.min, s.median);
  EXPECT_LE(s.median, s.max);
  EXPECT_LE(s.median, s.sufficient_n);
  for (int64_t n : s.samples) EXPECT_EQ((n - 2) % 2, 0);
}

TEST(EmpiricalMinNTest, MedianGrowsWithRows) {
  int64_t previous = 0;
  for (int m : {4, 6, 8}) {
    MinNSummary s = EmpiricalMinN({m, 2, 2}, 1, 60, 5);
    EXPECT_GE(s.median, previous) << "m=" << m;
    previous = s.median;
  }
}

TEST(EmpiricalMinNTest, LargerTilesDoNotHurtOnACommonGrid) {
  // k=2 widths move in steps of 4 core columns, k=1 in steps of 2, so k=1
  // samples are rounded up to the k=2 grid before comparing medians. Coverage
  // is monotone in width because wider samples extend narrower ones.
  MinNSummary one = EmpiricalMinN({8, 3, 2}, 1, 60, 7);
  MinNSummary two = EmpiricalMinN({8, 3, 2}, 2, 60, 7);
  std::vector<int64_t> on_grid;
  for (int64_t n : one.samples) on_grid.push_back((n - 2 + 3) / 4 * 4 + 2);
  std::sort(on_grid.begin(), on_grid.end());
  EXPECT_LE(two.median, on_grid[(on_grid.size() - 1) / 2]);
}

TEST(EmpiricalMinNTest, RejectsOversizedProblems) {
  EXPECT_THROW(EmpiricalMinN({200, 4, 3}, 1, 1, 1), Error);
}

TEST(EstimateCsvTest, Format) {
  EXPECT_EQ(EstimateCsvHeader(),
            "quantity,m,t,alpha,k,n_core,trials,estimate,stderr,exact,z");
  EXPECT_EQ(EstimateCsvRow("gamma", 0, 3, 2, 1, 2, 4, 0.25, 0.2165063509,
                           0.25, 0.0),
            "gamma,0,3,2,1,2,4,0.25,0.2165063509,0.25,0");
  EXPECT_EQ(EstimateCsvRow("x", 1, 1, 2, 1, 2, 1, 1, 0, NAN, 0),
            "x,1,1,2,1,2,1,1,0,,0");
}

}  // namespace
}  // namespace covlll
