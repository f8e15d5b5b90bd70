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

// Moser-Tardos style construction of covering arrays over the tiled model.
//
// Bad events are (row set r, vector z) pairs with z absent from r. Each round
// takes the lexicographically first bad event and redraws every core tile of
// every row in r. The alpha augmentation columns are never touched.

#ifndef COVLLL_SRC_CONSTRUCT_H_
#define COVLLL_SRC_CONSTRUCT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "bounds.h"
#include "matrix.h"
#include "verify.h"

namespace covlll {

struct ConstructOptions {
  // Total columns including the alpha augmentation columns. When unset,
  // SufficientN(params, k, mode) decides.
  std::optional<int64_t> n;
  uint64_t seed = 0;
  // Defaults to 100 * C(m, t).
  std::optional<uint64_t> max_resamples;
  DegreeMode mode = DegreeMode::kExact;
  bool record_trace = false;
};

struct ConstructionLog {
  bool success = false;
  uint64_t resample_count = 0;
  uint64_t max_resamples = 0;
  std::vector<MissingTuple> trace;  // only with record_trace
  double wall_seconds = 0.0;
  int64_t final_n = 0;
  int64_t core_n = 0;
  int k = 0;
  uint64_t seed = 0;
  uint64_t final_missing_count = 0;
  uint64_t best_missing_count = 0;  // fewest missing tuples seen in any round
};

struct ConstructResult {
  ArrayMatrix matrix;  // covering iff log.success
  ConstructionLog log;
};

uint64_t DefaultMaxResamples(const CoveringParams& params);

// Invalid parameters throw; running out of resamples does not, it returns
// with log.success == false.
ConstructResult Construct(const CoveringParams& params, int k,
                          const ConstructOptions& options);

}  // namespace covlll

#endif  // COVLLL_SRC_CONSTRUCT_H_
