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

#include "construct.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <string>

#include "error.h"
#include "model.h"

namespace covlll {

uint64_t DefaultMaxResamples(const CoveringParams& params) {
  ExactInteger events = Binomial(params.m, params.t) * 100;
  if (!events.fits_ulong_p()) return std::numeric_limits<uint64_t>::max();
  return events.get_ui();
}

ConstructResult Construct(const CoveringParams& params, int k,
                          const ConstructOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (k < 1) ThrowInvalid("construction needs a tile multiplicity k >= 1");
  if (params.alpha < 2 || params.alpha > kMaxAlpha) {
    ThrowInvalid("alpha out of range");
  }
  if (params.t < 1 || params.t > params.m) ThrowInvalid("need 1 <= t <= m");

  int64_t total_n = 0;
  if (options.n) {
    total_n = *options.n;
  } else {
    total_n = SufficientN(params, k, options.mode).sufficient_n;
  }
  const int64_t core_n = total_n - params.alpha;
  const int64_t width = static_cast<int64_t>(k) * params.alpha;
  if (core_n <= 0 || core_n % width != 0) {
    ThrowInvalid("n = " + std::to_string(total_n) + " leaves a core of " +
                 std::to_string(core_n) +
                 " columns, which must be a positive multiple of k*alpha = " +
                 std::to_string(width));
  }
  if (core_n > std::numeric_limits<int>::max() / 2) {
    ThrowInvalid("n too large");
  }

  ConstructResult result;
  ConstructionLog& log = result.log;
  log.k = k;
  log.seed = options.seed;
  log.final_n = total_n;
  log.core_n = core_n;
  log.max_resamples =
      options.max_resamples.value_or(DefaultMaxResamples(params));

  result.matrix = SampleArray(params, static_cast<int>(core_n), k,
                              /*augment=*/true, options.seed);
  // Generation 0 is the initial draw; each resample of a row bumps it.
  std::vector<uint64_t> generation(static_cast<size_t>(params.m), 0);

  FirstDeficiency deficiency = FindFirstMissing(result.matrix, params.t);
  log.best_missing_count = deficiency.missing_count;
  while (deficiency.first && log.resample_count < log.max_resamples) {
    const MissingTuple& event = *deficiency.first;
    for (int r : event.row_set) {
      ResampleRow(result.matrix, r, options.seed, ++generation[r]);
    }
    if (options.record_trace) log.trace.push_back(event);
    ++log.resample_count;
    deficiency = FindFirstMissing(result.matrix, params.t);
    log.best_missing_count =
        std::min(log.best_missing_count, deficiency.missing_count);
  }
  log.final_missing_count = deficiency.missing_count;
  log.success = !deficiency.first.has_value();
  if (log.success && !IsCovering(result.matrix, params.t)) {
    throw std::logic_error("constructed matrix failed verification");
  }
  log.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return result;
}

}  // namespace covlll
