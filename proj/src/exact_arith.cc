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
#include <numeric>

#include "error.h"

namespace covlll {

ExactRational MakeRational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) ThrowInvalid("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

ExactInteger Binomial(int64_t n, int64_t r) {
  if (n < 0) ThrowInvalid("binomial: n must be non-negative");
  if (r < 0 || r > n) return 0;
  ExactInteger out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return out;
}

ExactInteger Factorial(int64_t n) {
  if (n < 0) ThrowInvalid("factorial of a negative number");
  ExactInteger out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

ExactInteger Multinomial(int64_t n, std::span<const int64_t> parts) {
  if (n < 0) ThrowInvalid("multinomial: n must be non-negative");
  int64_t sum = 0;
  for (int64_t p : parts) {
    if (p < 0) ThrowInvalid("multinomial: negative part");
    sum += p;
  }
  if (sum != n) {
    ThrowInvalid("multinomial: parts sum to " + std::to_string(sum) +
                 ", expected " + std::to_string(n));
  }
  // Product of binomials avoids the large intermediate n!.
  ExactInteger out = 1;
  int64_t remaining = n;
  for (int64_t p : parts) {
    out *= Binomial(remaining, p);
    remaining -= p;
  }
  return out;
}

ExactInteger Pow(const ExactInteger& base, uint64_t e) {
  ExactInteger out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

ExactRational RationalPow(const ExactRational& base, uint64_t e) {
  // Powers of a reduced fraction stay reduced.
  ExactRational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(),
             static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(),
             static_cast<unsigned long>(e));
  return out;
}

double Log2(const ExactInteger& value) {
  if (value <= 0) ThrowInvalid("log2 of a non-positive integer");
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

double Log2(const ExactRational& value) {
  if (value <= 0) ThrowInvalid("log2 of a non-positive rational");
  return Log2(ExactInteger(value.get_num())) -
         Log2(ExactInteger(value.get_den()));
}

double ToDouble(const ExactRational& value) {
  if (value == 0) return 0.0;
  long num_exp = 0, den_exp = 0;
  double num = mpz_get_d_2exp(&num_exp, value.get_num_mpz_t());
  double den = mpz_get_d_2exp(&den_exp, value.get_den_mpz_t());
  return std::ldexp(num / den, static_cast<int>(num_exp - den_exp));
}

std::string ToDecimalString(const ExactInteger& value) {
  return value.get_str(10);
}

}  // namespace covlll
