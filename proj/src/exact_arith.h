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

// Exact integer and rational combinatorics. Nothing in here touches floating
// point except the explicit Log2 helpers used at the very end of a bound
// computation.

#ifndef COVLLL_SRC_EXACT_ARITH_H_
#define COVLLL_SRC_EXACT_ARITH_H_

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>

namespace covlll {

using ExactInteger = mpz_class;

// GMP keeps results of mpq arithmetic canonical (lowest terms, positive
// denominator). Values built from a raw numerator/denominator pair must go
// through MakeRational.
using ExactRational = mpq_class;

ExactRational MakeRational(const ExactInteger& num, const ExactInteger& den);

// C(n, r); zero when r < 0 or r > n.
ExactInteger Binomial(int64_t n, int64_t r);

// n! / prod(parts_i!). Throws if the parts do not sum to n.
ExactInteger Multinomial(int64_t n, std::span<const int64_t> parts);

ExactInteger Factorial(int64_t n);

ExactInteger Pow(const ExactInteger& base, uint64_t e);
ExactRational RationalPow(const ExactRational& base, uint64_t e);

// log2 of a positive integer / rational, accurate to double precision even
// when the value is far outside double range.
double Log2(const ExactInteger& value);
double Log2(const ExactRational& value);

// Closest double; finite only while the value fits in double range.
double ToDouble(const ExactRational& value);

std::string ToDecimalString(const ExactInteger& value);

}  // namespace covlll

#endif  // COVLLL_SRC_EXACT_ARITH_H_
