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

#include "exact_arith.h"

#include <cmath>
#include <random>
#include <vector>

#include "error.h"
#include "gtest/gtest.h"

namespace covlll {
namespace {

TEST(BinomialTest, SmallValuesAndBoundaries) {
  EXPECT_EQ(Binomial(4, 2), 6);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(Binomial(n, 0), 1);
  EXPECT_EQ(Binomial(10, 11), 0);
  EXPECT_EQ(Binomial(10, -1), 0);
  EXPECT_EQ(Binomial(0, 0), 1);
}

TEST(BinomialTest, PascalIdentityExhaustive) {
  for (int n = 2; n <= 64; ++n) {
    for (int r = 1; r < n; ++r) {
      EXPECT_EQ(Binomial(n, r), Binomial(n - 1, r - 1) + Binomial(n - 1, r))
          << "n=" << n << " r=" << r;
    }
  }
}

TEST(BinomialTest, BeyondSixtyFourBits) {
  // C(100, 50) = 100891344545564193334812497256
  EXPECT_EQ(ToDecimalString(Binomial(100, 50)),
            "100891344545564193334812497256");
}

TEST(MultinomialTest, Examples) {
  std::vector<int64_t> two{2, 2};
  EXPECT_EQ(Multinomial(4, two), 6);

  // 6! / (2! 2! 2!) evaluated with plain integers.
  int64_t fact6 = 1;
  for (int i = 2; i <= 6; ++i) fact6 *= i;
  std::vector<int64_t> three{2, 2, 2};
  EXPECT_EQ(Multinomial(6, three), fact6 / 8);
  EXPECT_EQ(Multinomial(6, three), 90);

  for (int n = 0; n <= 12; ++n) {
    std::vector<int64_t> whole{n};
    EXPECT_EQ(Multinomial(n, whole), 1);
  }
}

TEST(MultinomialTest, RejectsPartsNotSummingToN) {
  std::vector<int64_t> parts{2, 3};
  EXPECT_THROW(Multinomial(6, parts), Error);
  std::vector<int64_t> negative{7, -1};
  EXPECT_THROW(Multinomial(6, negative), Error);
}

TEST(MultinomialTest, EqualPartsMatchBinomialProduct) {
  for (int alpha = 1; alpha <= 24; ++alpha) {
    for (int k = 1; alpha * k <= 24; ++k) {
      const int n = alpha * k;
      std::vector<int64_t> parts(alpha, k);
      ExactInteger product = 1;
      for (int j = 0; j < alpha; ++j) product *= Binomial(n - j * k, k);
      EXPECT_EQ(Multinomial(n, parts), product)
          << "alpha=" << alpha << " k=" << k;
      // Also against the factorial definition.
      ExactInteger by_factorials = Factorial(n);
      for (int j = 0; j < alpha; ++j) by_factorials /= Factorial(k);
      EXPECT_EQ(Multinomial(n, parts), by_factorials);
    }
  }
}

TEST(RationalPowTest, Examples) {
  EXPECT_EQ(RationalPow(MakeRational(1, 2), 3), MakeRational(1, 8));
  EXPECT_EQ(RationalPow(MakeRational(17, 36), 0), ExactRational(1));
  EXPECT_EQ(RationalPow(MakeRational(17, 36), 2), MakeRational(289, 1296));
  EXPECT_EQ(RationalPow(MakeRational(-2, 3), 3), MakeRational(-8, 27));
}

TEST(RationalPowTest, ResultIsReduced) {
  ExactRational q = RationalPow(MakeRational(6, 4), 5);
  EXPECT_EQ(q.get_num(), 243);
  EXPECT_EQ(q.get_den(), 32);
}

TEST(ExactRationalTest, LowestTermsAndPositiveDenominator) {
  ExactRational q = MakeRational(10, -4);
  EXPECT_EQ(q.get_num(), -5);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_THROW(MakeRational(1, 0), Error);
}

TEST(ExactRationalTest, ReciprocalRoundTrip) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<long> dist(-1000000, 1000000);
  for (int i = 0; i < 500; ++i) {
    long a = dist(rng), b = dist(rng);
    if (a == 0 || b == 0) continue;
    ExactRational x = MakeRational(a, b);
    ExactRational y = MakeRational(b, a);
    EXPECT_EQ(ExactRational(x * y), ExactRational(1)) << a << "/" << b;
  }
}

TEST(Log2Test, LargeValues) {
  EXPECT_DOUBLE_EQ(Log2(ExactInteger(1024)), 10.0);
  EXPECT_NEAR(Log2(Pow(ExactInteger(3), 5000)), 5000 * std::log2(3.0), 1e-9);
  EXPECT_NEAR(Log2(MakeRational(1, Pow(ExactInteger(2), 3000))), -3000.0,
              1e-9);
  EXPECT_THROW(Log2(ExactInteger(0)), Error);
}

TEST(ToDoubleTest, HugeNumeratorAndDenominator) {
  ExactInteger big = Pow(ExactInteger(10), 400);
  EXPECT_DOUBLE_EQ(ToDouble(MakeRational(big * 3, big * 4)), 0.75);
  EXPECT_DOUBLE_EQ(ToDouble(MakeRational(17, 36)), 17.0 / 36.0);
}

}  // namespace
}  // namespace covlll
