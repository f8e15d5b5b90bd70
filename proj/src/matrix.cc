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

#include "matrix.h"

#include <istream>
#include <ostream>
#include <sstream>

#include "error.h"

namespace covlll {
namespace {

[[noreturn]] void ThrowParse(const std::string& what) {
  throw Error(ErrorCode::kParse, "matrix parse error: " + what);
}

}  // namespace

std::string Provenance::Describe() const {
  std::string out;
  switch (kind) {
    case Kind::kExternal:
      out = "external";
      break;
    case Kind::kIid:
      out = "iid";
      break;
    case Kind::kTiled:
      out = "tiled(" + std::to_string(k) + ")";
      break;
  }
  if (augmentation_columns > 0) {
    out += "+augmented(" + std::to_string(augmentation_columns) + ")";
  }
  return out;
}

ArrayMatrix::ArrayMatrix(int rows, int cols, int alpha, Provenance provenance)
    : rows_(rows), cols_(cols), alpha_(alpha), provenance_(provenance) {
  if (rows < 0 || cols < 0) ThrowInvalid("matrix dimensions must be >= 0");
  if (alpha < 1 || alpha > kMaxAlpha) {
    ThrowInvalid("alpha must be in [1, " + std::to_string(kMaxAlpha) + "]");
  }
  if (provenance_.augmentation_columns > cols) {
    ThrowInvalid("more augmentation columns than columns");
  }
  entries_.assign(static_cast<size_t>(rows) * cols, Letter{1});
}

ArrayMatrix ArrayMatrix::WithoutColumn(int c) const {
  if (c < 0 || c >= cols_) ThrowInvalid("column index out of range");
  ArrayMatrix out(rows_, cols_ - 1, alpha_);
  for (int r = 0; r < rows_; ++r) {
    int dst = 0;
    for (int j = 0; j < cols_; ++j) {
      if (j != c) out.set(r, dst++, at(r, j));
    }
  }
  return out;
}

ArrayMatrix ArrayMatrix::WithColumns(
    const std::vector<std::vector<Letter>>& extra) const {
  ArrayMatrix out(rows_, cols_ + static_cast<int>(extra.size()), alpha_,
                  provenance_);
  out.provenance_.augmentation_columns = 0;
  out.provenance_.kind = Provenance::Kind::kExternal;
  for (int r = 0; r < rows_; ++r) {
    for (int j = 0; j < cols_; ++j) out.set(r, j, at(r, j));
  }
  for (size_t e = 0; e < extra.size(); ++e) {
    if (extra[e].size() != static_cast<size_t>(rows_)) {
      ThrowInvalid("appended column has wrong length");
    }
    for (int r = 0; r < rows_; ++r) {
      Letter v = extra[e][r];
      if (v < 1 || v > alpha_) ThrowInvalid("appended letter out of range");
      out.set(r, cols_ + static_cast<int>(e), v);
    }
  }
  return out;
}

ArrayMatrix MatrixFromRows(const std::vector<std::vector<int>>& rows,
                           int alpha) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
  ArrayMatrix out(m, n, alpha);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(rows[r].size()) != n) ThrowInvalid("ragged rows");
    for (int c = 0; c < n; ++c) {
      int v = rows[r][c];
      if (v < 1 || v > alpha) {
        ThrowInvalid("entry " + std::to_string(v) + " outside [1, alpha]");
      }
      out.set(r, c, static_cast<Letter>(v));
    }
  }
  return out;
}

ArrayMatrix ReadMatrix(std::istream& in) {
  long long m = 0, n = 0, alpha = 0;
  if (!(in >> m >> n >> alpha)) ThrowParse("missing 'm n alpha' header");
  if (m < 1 || n < 0) ThrowParse("bad dimensions");
  if (alpha < 1 || alpha > kMaxAlpha) ThrowParse("alpha out of range");
  if (m * n > (1LL << 32)) ThrowParse("matrix too large");
  ArrayMatrix out(static_cast<int>(m), static_cast<int>(n),
                  static_cast<int>(alpha));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      long long v = 0;
      if (!(in >> v)) {
        ThrowParse("expected entry at row " + std::to_string(r) + ", column " +
                   std::to_string(c));
      }
      if (v < 1 || v > alpha) {
        ThrowParse("entry " + std::to_string(v) + " at row " +
                   std::to_string(r) + " outside [1, " +
                   std::to_string(alpha) + "]");
      }
      out.set(r, c, static_cast<Letter>(v));
    }
  }
  std::string trailing;
  if (in >> trailing) ThrowParse("trailing data after matrix");
  return out;
}

void WriteMatrix(std::ostream& out, const ArrayMatrix& matrix) {
  out << matrix.rows() << ' ' << matrix.cols() << ' ' << matrix.alpha()
      << '\n';
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int c = 0; c < matrix.cols(); ++c) {
      if (c > 0) out << ' ';
      out << static_cast<int>(matrix.at(r, c));
    }
    out << '\n';
  }
}

ArrayMatrix ParseMatrix(const std::string& text) {
  std::istringstream in(text);
  return ReadMatrix(in);
}

std::string FormatMatrix(const ArrayMatrix& matrix) {
  std::ostringstream out;
  WriteMatrix(out, matrix);
  return out.str();
}

}  // namespace covlll
