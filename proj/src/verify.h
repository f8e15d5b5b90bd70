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

// Exhaustive check of the covering property: every t-row subset must show
// every vector of {1..alpha}^t in some column.
//
// Row sets are visited in lexicographic order and vectors in lexicographic
// order within a row set, so reports are reproducible and usable as a
// resampling schedule. Row indices are 0-based; letters are 1-based.

#ifndef COVLLL_SRC_VERIFY_H_
#define COVLLL_SRC_VERIFY_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "matrix.h"

namespace covlll {

enum class VerifyStrategy {
  kHashed,    // one pass per row set, vectors indexed into a presence table
  kNaiveScan  // per (row set, vector) column scan; differential oracle
};

struct MissingTuple {
  std::vector<int> row_set;
  std::vector<int> vector;

  friend bool operator==(const MissingTuple&, const MissingTuple&) = default;
};

struct DeficiencyReport {
  std::vector<MissingTuple> missing;  // possibly truncated, see missing_count
  uint64_t missing_count = 0;
  uint64_t total_checked = 0;  // C(m, t) * alpha^t
  bool is_covering = false;
};

struct CoverageStats {
  uint64_t covered = 0;
  uint64_t total = 0;
  // For each row set (lexicographic), the fewest columns witnessing any one
  // vector. Zero means that row set misses something.
  std::vector<uint64_t> min_witness_per_row_set;
  uint64_t min_witness = 0;
};

bool IsCovering(const ArrayMatrix& matrix, int t,
                VerifyStrategy strategy = VerifyStrategy::kHashed);

// Lists up to `limit` missing tuples; missing_count is always exact.
DeficiencyReport MissingTuples(
    const ArrayMatrix& matrix, int t,
    VerifyStrategy strategy = VerifyStrategy::kHashed,
    uint64_t limit = std::numeric_limits<uint64_t>::max());

// Lexicographically first missing tuple plus the total number missing.
struct FirstDeficiency {
  std::optional<MissingTuple> first;
  uint64_t missing_count = 0;
};
FirstDeficiency FindFirstMissing(const ArrayMatrix& matrix, int t);

CoverageStats ComputeCoverageStats(const ArrayMatrix& matrix, int t);

}  // namespace covlll

#endif  // COVLLL_SRC_VERIFY_H_
