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

#ifndef COVLLL_SRC_MATRIX_H_
#define COVLLL_SRC_MATRIX_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace covlll {

using Letter = uint8_t;

inline constexpr int kMaxAlpha = 255;

struct Provenance {
  enum class Kind { kExternal, kIid, kTiled };

  Kind kind = Kind::kExternal;
  int k = 0;  // tile multiplicity, kTiled only
  // Constant columns appended at the right edge.
  int augmentation_columns = 0;

  std::string Describe() const;
};

// m x n matrix over {1..alpha}, row-major.
class ArrayMatrix {
 public:
  ArrayMatrix() = default;
  ArrayMatrix(int rows, int cols, int alpha, Provenance provenance = {});

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int alpha() const { return alpha_; }
  const Provenance& provenance() const { return provenance_; }
  Provenance& mutable_provenance() { return provenance_; }
  int core_cols() const { return cols_ - provenance_.augmentation_columns; }

  Letter at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }
  void set(int r, int c, Letter v) {
    entries_[static_cast<size_t>(r) * cols_ + c] = v;
  }

  std::span<const Letter> row(int r) const {
    return {entries_.data() + static_cast<size_t>(r) * cols_,
            static_cast<size_t>(cols_)};
  }
  std::span<Letter> mutable_row(int r) {
    return {entries_.data() + static_cast<size_t>(r) * cols_,
            static_cast<size_t>(cols_)};
  }

  // Copy with column c removed. Provenance becomes external.
  ArrayMatrix WithoutColumn(int c) const;

  // Copy with the given columns (each of length rows()) appended.
  ArrayMatrix WithColumns(const std::vector<std::vector<Letter>>& extra) const;

  friend bool operator==(const ArrayMatrix& a, const ArrayMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.alpha_ == b.alpha_ &&
           a.entries_ == b.entries_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  int alpha_ = 2;
  Provenance provenance_;
  std::vector<Letter> entries_;
};

// Builds a matrix from nested rows; throws if entries are out of range or
// rows are ragged.
ArrayMatrix MatrixFromRows(const std::vector<std::vector<int>>& rows,
                           int alpha);

// Text format: "m n alpha" then m lines of n space-separated letters.
ArrayMatrix ReadMatrix(std::istream& in);
void WriteMatrix(std::ostream& out, const ArrayMatrix& matrix);
ArrayMatrix ParseMatrix(const std::string& text);
std::string FormatMatrix(const ArrayMatrix& matrix);

}  // namespace covlll

#endif  // COVLLL_SRC_MATRIX_H_
