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

#include "montecarlo.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <span>
#include <thread>

#include "error.h"
#include "matrix.h"
#include "model.h"
#include "rng.h"
#include "verify.h"

namespace covlll {
namespace {

constexpr int kChunks = 64;
constexpr uint64_t kGammaStream = 0x6a11a000ULL;
constexpr uint64_t kLambdaStream = 0x1a3bda00ULL;
constexpr uint64_t kMinNStream = 0x313e0000ULL;

[[noreturn]] void ThrowWork(const std::string& what) {
  throw Error(ErrorCode::kWorkBound, what);
}

// Runs trial(rng) `trials` times across kChunks derived streams and returns
// the number of true results.
template <typename Trial>
uint64_t RunChunked(uint64_t trials, uint64_t seed, uint64_t stream,
                    int threads, const Trial& trial) {
  std::vector<uint64_t> hits(kChunks, 0);
  auto run_chunk = [&](int chunk) {
    uint64_t count = trials / kChunks + (chunk < static_cast<int>(trials % kChunks) ? 1 : 0);
    SplitMix64 rng(DeriveSeed(seed, {stream, static_cast<uint64_t>(chunk)}));
    uint64_t local = 0;
    for (uint64_t i = 0; i < count; ++i) local += trial(rng) ? 1 : 0;
    hits[chunk] = local;
  };
  threads = std::clamp(threads, 1, kChunks);
  if (threads == 1) {
    for (int c = 0; c < kChunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (int c = w; c < kChunks; c += threads) run_chunk(c);
      });
    }
    for (auto& worker : workers) worker.join();
  }
  uint64_t total = 0;
  for (uint64_t h : hits) total += h;
  return total;
}

EstimateReport Summarize(uint64_t trials, uint64_t hits,
                         std::optional<ExactRational> exact) {
  EstimateReport report;
  report.trials = trials;
  report.hits = hits;
  report.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) /
                               static_cast<double>(trials));
  report.exact = std::move(exact);
  if (report.exact) {
    double diff = report.estimate - ToDouble(*report.exact);
    if (report.std_error > 0.0) {
      report.z = diff / report.std_error;
    } else {
      report.z = diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
    }
  }
  return report;
}

// Does some column c have rows[i][c] == target[i] for all i?
bool StackContains(const std::vector<std::vector<Letter>>& rows,
                   const std::vector<int>& target) {
  const size_t width = rows.front().size();
  for (size_t c = 0; c < width; ++c) {
    bool match = true;
    for (size_t i = 0; i < rows.size() && match; ++i) {
      match = rows[i][c] == target[i];
    }
    if (match) return true;
  }
  return false;
}

ExactInteger CountCovered(const std::vector<std::pair<uint64_t, uint64_t>>& masks,
                          int levels, uint64_t partial) {
  if (partial == 0) return 0;
  if (levels == 0) return 1;
  ExactInteger total = 0;
  for (const auto& [mask, count] : masks) {
    ExactInteger below = CountCovered(masks, levels - 1, partial & mask);
    if (below != 0) total += below * count;
  }
  return total;
}

}  // namespace

uint64_t DefaultWorkBound() {
  if (const char* env = std::getenv(kWorkBoundEnv)) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultWorkBound;
}

ExactRational EnumerateGamma(int alpha, int t, int k) {
  return EnumerateGamma(alpha, t, k, DefaultWorkBound());
}

ExactRational EnumerateGamma(int alpha, int t, int k, uint64_t work_bound) {
  if (alpha < 2 || alpha > kMaxAlpha) ThrowInvalid("alpha out of range");
  if (k < 1) ThrowInvalid("k must be >= 1");
  if (t < 1) ThrowInvalid("t must be >= 1");
  const int width = alpha * k;
  const ExactInteger bound(static_cast<unsigned long>(work_bound));
  if (width > 64 || Multinomial(width, std::vector<int64_t>(alpha, k)) > bound ||
      Pow(Binomial(width, k), t) > bound) {
    ThrowWork("enumerating gamma for alpha=" + std::to_string(alpha) +
              " t=" + std::to_string(t) + " k=" + std::to_string(k) +
              " exceeds the work bound of " + std::to_string(work_bound));
  }

  // Every distinct arrangement of {1^k, ..., alpha^k}, reduced to the set of
  // positions holding letter 1.
  std::vector<Letter> tile(static_cast<size_t>(width));
  for (int i = 0; i < width; ++i) tile[i] = static_cast<Letter>(i / k + 1);
  std::map<uint64_t, uint64_t> histogram;
  uint64_t arrangements = 0;
  do {
    uint64_t mask = 0;
    for (int i = 0; i < width; ++i) {
      if (tile[i] == 1) mask |= uint64_t{1} << i;
    }
    ++histogram[mask];
    ++arrangements;
  } while (std::next_permutation(tile.begin(), tile.end()));

  std::vector<std::pair<uint64_t, uint64_t>> masks(histogram.begin(),
                                                   histogram.end());
  const uint64_t all = width == 64 ? ~uint64_t{0} : (uint64_t{1} << width) - 1;
  ExactInteger covered = CountCovered(masks, t, all);
  return MakeRational(covered, Pow(ExactInteger(static_cast<unsigned long>(arrangements)), t));
}

EstimateReport EstimateGamma(int alpha, int t, int k, uint64_t trials,
                             uint64_t seed, const std::vector<int>& target,
                             int threads) {
  if (alpha < 2 || alpha > kMaxAlpha) ThrowInvalid("alpha out of range");
  if (k < 1) ThrowInvalid("k must be >= 1");
  if (t < 1) ThrowInvalid("t must be >= 1");
  if (trials < 1) ThrowInvalid("trials must be >= 1");
  std::vector<int> vec = target.empty() ? std::vector<int>(t, 1) : target;
  if (static_cast<int>(vec.size()) != t) ThrowInvalid("target must have t letters");
  for (int v : vec) {
    if (v < 1 || v > alpha) ThrowInvalid("target letter outside [1, alpha]");
  }
  const size_t width = static_cast<size_t>(alpha) * k;
  uint64_t hits = RunChunked(trials, seed, kGammaStream, threads,
                             [&](SplitMix64& rng) {
                               std::vector<std::vector<Letter>> stack(
                                   t, std::vector<Letter>(width));
                               for (auto& tile : stack) {
                                 SampleTile(tile, alpha, k, rng);
                               }
                               return StackContains(stack, vec);
                             });
  return Summarize(trials, hits, GammaK(alpha, t, k));
}

EstimateReport EstimateLambda(const CoveringParams& params, int k, int n_core,
                              uint64_t trials, uint64_t seed, int threads) {
  const int alpha = params.alpha;
  const int t = params.t;
  if (alpha < 2 || alpha > kMaxAlpha) ThrowInvalid("alpha out of range");
  if (k < 1) ThrowInvalid("k must be >= 1");
  if (t < 1) ThrowInvalid("t must be >= 1");
  if (trials < 1) ThrowInvalid("trials must be >= 1");
  const int width = alpha * k;
  if (n_core <= 0 || n_core % width != 0) {
    ThrowInvalid("n_core must be a positive multiple of k*alpha = " +
                 std::to_string(width));
  }
  const std::vector<int> ones(t, 1);
  uint64_t hits = RunChunked(
      trials, seed, kLambdaStream, threads, [&](SplitMix64& rng) {
        std::vector<std::vector<Letter>> rows(t, std::vector<Letter>(n_core));
        for (auto& row : rows) {
          for (int start = 0; start < n_core; start += width) {
            SampleTile(std::span<Letter>(row).subspan(start, width), alpha, k,
                       rng);
          }
        }
        return !StackContains(rows, ones);
      });
  ExactRational exact = RationalPow(1 - GammaK(alpha, t, k),
                                    static_cast<uint64_t>(n_core / width));
  return Summarize(trials, hits, exact);
}

MinNSummary EmpiricalMinN(const CoveringParams& params, int k, uint64_t trials,
                          uint64_t seed) {
  params.ValidateForBounds();
  if (k < 1) ThrowInvalid("k must be >= 1");
  if (trials < 1) ThrowInvalid("trials must be >= 1");
  if (Binomial(params.m, params.t) * Pow(ExactInteger(params.alpha), params.t) >
      1'000'000) {
    ThrowWork("empirical min n needs C(m,t) * alpha^t <= 10^6");
  }
  MinNSummary summary;
  summary.sufficient_n = SufficientN(params, k, DegreeMode::kExact).sufficient_n;
  const int width = k * params.alpha;
  // Far past the LLL width a trial is considered runaway.
  const int64_t cap = 8 * summary.sufficient_n + 64 * width;
  for (uint64_t trial = 0; trial < trials; ++trial) {
    uint64_t trial_seed = DeriveSeed(seed, {kMinNStream, trial});
    int64_t core = width;
    while (!IsCovering(SampleArray(params, static_cast<int>(core), k, true,
                                   trial_seed),
                       params.t)) {
      core += width;
      if (core > cap) ThrowWork("empirical min n did not converge");
    }
    int64_t total = core + params.alpha;
    summary.samples.push_back(total);
    if (total > summary.sufficient_n) ++summary.trials_above_bound;
  }
  std::vector<int64_t> sorted = summary.samples;
  std::sort(sorted.begin(), sorted.end());
  summary.min = sorted.front();
  summary.max = sorted.back();
  summary.median = sorted[(sorted.size() - 1) / 2];
  return summary;
}

std::string EstimateCsvHeader() {
  return "quantity,m,t,alpha,k,n_core,trials,estimate,stderr,exact,z";
}

std::string EstimateCsvRow(const std::string& quantity, int m, int t,
                           int alpha, int k, int n_core, uint64_t trials,
                           double estimate, double std_error, double exact,
                           double z) {
  char exact_buf[64] = "";
  if (!std::isnan(exact)) std::snprintf(exact_buf, sizeof(exact_buf), "%.12g", exact);
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%d,%d,%llu,%.10g,%.10g,%s,%.6g",
                quantity.c_str(), m, t, alpha, k, n_core,
                static_cast<unsigned long long>(trials), estimate, std_error,
                exact_buf, z);
  return buf;
}

}  // namespace covlll
