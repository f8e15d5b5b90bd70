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

#include "verify.h"

#include <algorithm>
#include <span>
#include <string>

#include "error.h"

namespace covlll {
namespace {

// Presence tables above this many entries are refused.
constexpr uint64_t kMaxVectorSpace = uint64_t{1} << 24;

uint64_t VectorSpace(const ArrayMatrix& matrix, int t) {
  if (t < 1 || t > matrix.rows()) {
    ThrowInvalid("t must satisfy 1 <= t <= m (t = " + std::to_string(t) +
                 ", m = " + std::to_string(matrix.rows()) + ")");
  }
  uint64_t space = 1;
  for (int i = 0; i < t; ++i) {
    space *= static_cast<uint64_t>(matrix.alpha());
    if (space > kMaxVectorSpace) {
      throw Error(ErrorCode::kWorkBound, "alpha^t too large to verify");
    }
  }
  return space;
}

// Advances `rows` to the next t-subset of {0..m-1} in lexicographic order.
bool NextRowSet(std::vector<int>& rows, int m) {
  const int t = static_cast<int>(rows.size());
  int i = t - 1;
  while (i >= 0 && rows[i] == m - t + i) --i;
  if (i < 0) return false;
  ++rows[i];
  for (int j = i + 1; j < t; ++j) rows[j] = rows[j - 1] + 1;
  return true;
}

std::vector<int> DecodeVector(uint64_t index, int t, int alpha) {
  std::vector<int> out(t);
  for (int i = t - 1; i >= 0; --i) {
    out[i] = static_cast<int>(index % alpha) + 1;
    index /= alpha;
  }
  return out;
}

// Calls fn(rows, witness_counts) for each row set; witness_counts[v] is the
// number of columns realizing vector index v (first row most significant).
// Stops early when fn returns false.
template <typename Fn>
void ScanHashed(const ArrayMatrix& matrix, int t, Fn&& fn) {
  const uint64_t space = VectorSpace(matrix, t);
  std::vector<uint32_t> counts(space);
  std::vector<uint64_t> column_index(static_cast<size_t>(matrix.cols()));
  std::vector<int> rows(t);
  for (int i = 0; i < t; ++i) rows[i] = i;
  do {
    std::fill(column_index.begin(), column_index.end(), 0);
    for (int r : rows) {
      std::span<const Letter> row = matrix.row(r);
      for (size_t c = 0; c < row.size(); ++c) {
        column_index[c] = column_index[c] * matrix.alpha() + (row[c] - 1);
      }
    }
    std::fill(counts.begin(), counts.end(), 0);
    for (uint64_t idx : column_index) ++counts[idx];
    if (!fn(std::span<const int>(rows), std::span<const uint32_t>(counts))) {
      return;
    }
  } while (NextRowSet(rows, matrix.rows()));
}

bool ColumnRealizes(const ArrayMatrix& matrix, std::span<const int> rows,
                    const std::vector<int>& vec, int c) {
  for (size_t i = 0; i < rows.size(); ++i) {
    if (matrix.at(rows[i], c) != vec[i]) return false;
  }
  return true;
}

DeficiencyReport NaiveMissing(const ArrayMatrix& matrix, int t,
                              uint64_t limit) {
  const uint64_t space = VectorSpace(matrix, t);
  DeficiencyReport report;
  std::vector<int> rows(t);
  for (int i = 0; i < t; ++i) rows[i] = i;
  do {
    for (uint64_t v = 0; v < space; ++v) {
      ++report.total_checked;
      std::vector<int> vec = DecodeVector(v, t, matrix.alpha());
      bool found = false;
      for (int c = 0; c < matrix.cols() && !found; ++c) {
        found = ColumnRealizes(matrix, rows, vec, c);
      }
      if (!found) {
        if (report.missing.size() < limit) {
          report.missing.push_back({rows, std::move(vec)});
        }
        ++report.missing_count;
      }
    }
  } while (NextRowSet(rows, matrix.rows()));
  report.is_covering = report.missing_count == 0;
  return report;
}

}  // namespace

bool IsCovering(const ArrayMatrix& matrix, int t, VerifyStrategy strategy) {
  if (strategy == VerifyStrategy::kNaiveScan) {
    return NaiveMissing(matrix, t, 0).is_covering;
  }
  bool covering = true;
  ScanHashed(matrix, t, [&](std::span<const int>, std::span<const uint32_t> c) {
    covering = std::find(c.begin(), c.end(), 0u) == c.end();
    return covering;
  });
  return covering;
}

DeficiencyReport MissingTuples(const ArrayMatrix& matrix, int t,
                               VerifyStrategy strategy, uint64_t limit) {
  if (strategy == VerifyStrategy::kNaiveScan) {
    return NaiveMissing(matrix, t, limit);
  }
  DeficiencyReport report;
  ScanHashed(matrix, t,
             [&](std::span<const int> rows, std::span<const uint32_t> counts) {
               for (uint64_t v = 0; v < counts.size(); ++v) {
                 ++report.total_checked;
                 if (counts[v] != 0) continue;
                 if (report.missing.size() < limit) {
                   report.missing.push_back(
                       {std::vector<int>(rows.begin(), rows.end()),
                        DecodeVector(v, t, matrix.alpha())});
                 }
                 ++report.missing_count;
               }
               return true;
             });
  report.is_covering = report.missing_count == 0;
  return report;
}

FirstDeficiency FindFirstMissing(const ArrayMatrix& matrix, int t) {
  FirstDeficiency out;
  DeficiencyReport report = MissingTuples(matrix, t, VerifyStrategy::kHashed, 1);
  out.missing_count = report.missing_count;
  if (!report.missing.empty()) out.first = std::move(report.missing.front());
  return out;
}

CoverageStats ComputeCoverageStats(const ArrayMatrix& matrix, int t) {
  CoverageStats stats;
  ScanHashed(matrix, t,
             [&](std::span<const int>, std::span<const uint32_t> counts) {
               stats.total += counts.size();
               uint64_t fewest = counts.empty() ? 0 : counts[0];
               for (uint32_t c : counts) {
                 if (c > 0) ++stats.covered;
                 fewest = std::min<uint64_t>(fewest, c);
               }
               stats.min_witness_per_row_set.push_back(fewest);
               return true;
             });
  stats.min_witness = stats.min_witness_per_row_set.empty()
                          ? 0
                          : *std::min_element(
                                stats.min_witness_per_row_set.begin(),
                                stats.min_witness_per_row_set.end());
  return stats;
}

}  // namespace covlll
