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

#include "model.h"

#include <algorithm>
#include <random>
#include <string>

#include "error.h"

namespace covlll {
namespace {

constexpr uint64_t kIidStream = 0x11d0000000000000ULL;

void CheckTiling(int n_core, int alpha, int k) {
  if (alpha < 2 || alpha > kMaxAlpha) ThrowInvalid("alpha out of range");
  if (k < 1) ThrowInvalid("tile multiplicity k must be >= 1");
  if (n_core <= 0) ThrowInvalid("core width must be positive");
  if (n_core % (k * alpha) != 0) {
    ThrowInvalid("core width " + std::to_string(n_core) +
                 " is not a multiple of k*alpha = " +
                 std::to_string(k * alpha));
  }
}

void CheckRows(const CoveringParams& params) {
  if (params.m < 1) ThrowInvalid("m must be >= 1");
  if (params.alpha < 2 || params.alpha > kMaxAlpha) {
    ThrowInvalid("alpha out of range");
  }
}

}  // namespace

void SampleTile(std::span<Letter> tile, int alpha, int k, SplitMix64& rng) {
  size_t pos = 0;
  for (int letter = 1; letter <= alpha; ++letter) {
    for (int c = 0; c < k; ++c) tile[pos++] = static_cast<Letter>(letter);
  }
  std::shuffle(tile.begin(), tile.end(), rng);
}

void SampleTiledRow(std::span<Letter> row, int alpha, int k, uint64_t seed,
                    uint64_t row_index, uint64_t generation) {
  CheckTiling(static_cast<int>(row.size()), alpha, k);
  const size_t width = static_cast<size_t>(k) * alpha;
  for (size_t j = 0; j * width < row.size(); ++j) {
    SplitMix64 rng(DeriveSeed(seed, {row_index, j, generation}));
    SampleTile(row.subspan(j * width, width), alpha, k, rng);
  }
}

std::vector<Letter> SampleTiledRow(int n_core, int alpha, int k, uint64_t seed,
                                   uint64_t row_index, uint64_t generation) {
  CheckTiling(n_core, alpha, k);
  std::vector<Letter> row(static_cast<size_t>(n_core));
  SampleTiledRow(row, alpha, k, seed, row_index, generation);
  return row;
}

ArrayMatrix SampleArray(const CoveringParams& params, int n_core, int k,
                        bool augment, uint64_t seed) {
  CheckRows(params);
  CheckTiling(n_core, params.alpha, k);
  Provenance provenance{Provenance::Kind::kTiled, k,
                        augment ? params.alpha : 0};
  const int cols = n_core + provenance.augmentation_columns;
  ArrayMatrix out(params.m, cols, params.alpha, provenance);
  for (int r = 0; r < params.m; ++r) {
    std::span<Letter> row = out.mutable_row(r);
    SampleTiledRow(row.first(static_cast<size_t>(n_core)), params.alpha, k,
                   seed, static_cast<uint64_t>(r), 0);
    for (int a = 0; a < provenance.augmentation_columns; ++a) {
      row[n_core + a] = static_cast<Letter>(a + 1);
    }
  }
  return out;
}

ArrayMatrix SampleIidArray(const CoveringParams& params, int n, uint64_t seed) {
  CheckRows(params);
  if (n < 1) ThrowInvalid("n must be >= 1");
  ArrayMatrix out(params.m, n, params.alpha, {Provenance::Kind::kIid, 0, 0});
  std::uniform_int_distribution<int> letter(1, params.alpha);
  for (int r = 0; r < params.m; ++r) {
    SplitMix64 rng(DeriveSeed(seed, {kIidStream, static_cast<uint64_t>(r)}));
    for (Letter& v : out.mutable_row(r)) v = static_cast<Letter>(letter(rng));
  }
  return out;
}

void ResampleRow(ArrayMatrix& matrix, int row, uint64_t seed,
                 uint64_t generation) {
  const Provenance& p = matrix.provenance();
  if (p.kind != Provenance::Kind::kTiled) {
    ThrowInvalid("resampling needs a tiled matrix");
  }
  SampleTiledRow(matrix.mutable_row(row).first(
                     static_cast<size_t>(matrix.core_cols())),
                 matrix.alpha(), p.k, seed, static_cast<uint64_t>(row),
                 generation);
}

bool TilesWellFormed(const ArrayMatrix& matrix) {
  const Provenance& p = matrix.provenance();
  if (p.kind != Provenance::Kind::kTiled || p.k < 1) return false;
  const int width = p.k * matrix.alpha();
  if (matrix.core_cols() % width != 0) return false;
  std::vector<int> counts(static_cast<size_t>(matrix.alpha()) + 1);
  for (int r = 0; r < matrix.rows(); ++r) {
    for (int start = 0; start < matrix.core_cols(); start += width) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int c = start; c < start + width; ++c) ++counts[matrix.at(r, c)];
      for (int a = 1; a <= matrix.alpha(); ++a) {
        if (counts[a] != p.k) return false;
      }
    }
  }
  return true;
}

}  // namespace covlll
