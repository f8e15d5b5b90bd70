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

// Random matrices under the i.i.d. model and the tiled model.
//
// Tile j of row r is drawn from its own stream keyed by (seed, r, j,
// generation), so a matrix is reproducible regardless of generation order
// and a wider matrix with the same seed extends a narrower one.

#ifndef COVLLL_SRC_MODEL_H_
#define COVLLL_SRC_MODEL_H_

#include <cstdint>
#include <span>
#include <vector>

#include "bounds.h"
#include "matrix.h"
#include "rng.h"

namespace covlll {

// Uniform arrangement of the multiset {1^k, ..., alpha^k} into `tile`
// (length k * alpha).
void SampleTile(std::span<Letter> tile, int alpha, int k, SplitMix64& rng);

// Fills `row` (length n_core, a multiple of k * alpha) with independent tiles.
void SampleTiledRow(std::span<Letter> row, int alpha, int k, uint64_t seed,
                    uint64_t row_index, uint64_t generation = 0);

std::vector<Letter> SampleTiledRow(int n_core, int alpha, int k, uint64_t seed,
                                   uint64_t row_index, uint64_t generation = 0);

// m tiled rows of width n_core; with `augment`, alpha constant columns
// (all 1s, ..., all alphas) are appended on the right.
ArrayMatrix SampleArray(const CoveringParams& params, int n_core, int k,
                        bool augment, uint64_t seed);

ArrayMatrix SampleIidArray(const CoveringParams& params, int n, uint64_t seed);

// Redraws every tile of `row`'s core from the stream for `generation`.
// Augmentation columns are left alone.
void ResampleRow(ArrayMatrix& matrix, int row, uint64_t seed,
                 uint64_t generation);

// True iff every core tile of every row holds exactly k copies of each
// letter. Requires tiled provenance.
bool TilesWellFormed(const ArrayMatrix& matrix);

}  // namespace covlll

#endif  // COVLLL_SRC_MODEL_H_
