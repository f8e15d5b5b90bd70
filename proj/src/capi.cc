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

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <new>
#include <string>
#include <vector>

#include "bounds.h"
#include "construct.h"
#include "covlll/covlll.h"
#include "error.h"
#include "matrix.h"
#include "model.h"
#include "montecarlo.h"
#include "report_json.h"
#include "verify.h"

struct covlll_matrix {
  covlll::ArrayMatrix value;
};

namespace {

using covlll::Error;
using covlll::ErrorCode;

thread_local std::string g_last_error;

covlll_status Fail(covlll_status status, const std::string& what) {
  g_last_error = what;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
covlll_status Guard(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const Error& e) {
    return Fail(static_cast<covlll_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(COVLLL_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(COVLLL_E_INTERNAL, e.what());
  }
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) covlll::ThrowInvalid(what);
}

covlll::DegreeMode Mode(covlll_degree_mode mode) {
  if (mode == COVLLL_DEGREE_EXACT) return covlll::DegreeMode::kExact;
  if (mode == COVLLL_DEGREE_RELAXED) return covlll::DegreeMode::kRelaxed;
  covlll::ThrowInvalid("unknown degree mode");
}

const covlll::ArrayMatrix& Get(const covlll_matrix* matrix) {
  Require(matrix != nullptr, "null matrix handle");
  return matrix->value;
}

covlll_matrix* Wrap(covlll::ArrayMatrix value) {
  return new covlll_matrix{std::move(value)};
}

void FillEstimate(const covlll::EstimateReport& report, covlll_estimate* out) {
  out->trials = report.trials;
  out->hits = report.hits;
  out->estimate = report.estimate;
  out->std_error = report.std_error;
  out->exact = report.exact ? covlll::ToDouble(*report.exact)
                            : std::numeric_limits<double>::quiet_NaN();
  out->z = report.z;
}

void SplitRational(const covlll::ExactRational& q, char** num, char** den) {
  std::string n = q.get_num().get_str();
  std::string d = q.get_den().get_str();
  *num = Dup(n);
  try {
    *den = Dup(d);
  } catch (...) {
    std::free(*num);
    *num = nullptr;
    throw;
  }
}

}  // namespace

extern "C" {

const char* covlll_version(void) { return "1.0.0"; }

const char* covlll_last_error(void) { return g_last_error.c_str(); }

const char* covlll_status_name(covlll_status status) {
  switch (status) {
    case COVLLL_OK:
      return "ok";
    case COVLLL_E_INVALID_ARGUMENT:
      return "invalid argument";
    case COVLLL_E_PARSE:
      return "parse error";
    case COVLLL_E_WORK_BOUND:
      return "work bound exceeded";
    case COVLLL_E_CONSTRUCTION_FAILED:
      return "construction failed";
    case COVLLL_E_IO:
      return "i/o error";
    case COVLLL_E_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void covlll_string_free(char* str) { std::free(str); }

covlll_status covlll_gamma(int alpha, int t, int k, char** num, char** den) {
  return Guard([&] {
    Require(num != nullptr && den != nullptr, "null output pointer");
    SplitRational(covlll::GammaK(alpha, t, k), num, den);
    return COVLLL_OK;
  });
}

covlll_status covlll_coefficient(int alpha, int t, int k, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = covlll::Coefficient(alpha, t, k);
    return COVLLL_OK;
  });
}

covlll_status covlll_coefficient_closed_form(int alpha, int t, double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = covlll::CoefficientTiledClosedForm(alpha, t);
    return COVLLL_OK;
  });
}

covlll_status covlll_dependency_degree_plus_one(int m, int t,
                                                covlll_degree_mode mode,
                                                double* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = covlll::ToDouble(covlll::DependencyDegreePlusOne(m, t, Mode(mode)));
    return COVLLL_OK;
  });
}

covlll_status covlll_lll_check(int m, int t, int alpha, int k, int64_t n,
                               covlll_degree_mode mode, int* satisfied,
                               double* product) {
  return Guard([&] {
    Require(satisfied != nullptr && product != nullptr, "null output pointer");
    covlll::LllResult r = covlll::LllCheck({m, t, alpha}, k, n, Mode(mode));
    *satisfied = r.satisfied ? 1 : 0;
    *product = r.product;
    return COVLLL_OK;
  });
}

covlll_status covlll_sufficient_n(int m, int t, int alpha, int k,
                                  covlll_degree_mode mode, int64_t* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = covlll::SufficientN({m, t, alpha}, k, Mode(mode)).sufficient_n;
    return COVLLL_OK;
  });
}

covlll_status covlll_bound_report_json(int m, int t, int alpha, int k,
                                       covlll_degree_mode mode, char** json) {
  return Guard([&] {
    Require(json != nullptr, "null output pointer");
    Require(k >= 0, "k must be >= 0");
    nlohmann::json report;
    if (m > 0) {
      report = covlll::BoundReportJson(
          covlll::SufficientN({m, t, alpha}, k, Mode(mode)));
    } else {
      Require(t >= 2, "t must be >= 2 for bound computations");
      report = covlll::CoefficientReportJson(t, alpha, k, Mode(mode));
    }
    *json = Dup(report.dump());
    return COVLLL_OK;
  });
}

covlll_status covlll_table_text(char** text) {
  return Guard([&] {
    Require(text != nullptr, "null output pointer");
    *text = Dup(covlll::FormatTable(covlll::ReferenceTable()));
    return COVLLL_OK;
  });
}

covlll_status covlll_table_json(char** json) {
  return Guard([&] {
    Require(json != nullptr, "null output pointer");
    *json = Dup(covlll::TableJson(covlll::ReferenceTable()).dump());
    return COVLLL_OK;
  });
}

covlll_status covlll_matrix_sample_tiled(int m, int alpha, int n_core, int k,
                                         int augment, uint64_t seed,
                                         covlll_matrix** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    covlll::CoveringParams params{m, 1, alpha};
    *out = Wrap(covlll::SampleArray(params, n_core, k, augment != 0, seed));
    return COVLLL_OK;
  });
}

covlll_status covlll_matrix_sample_iid(int m, int alpha, int n, uint64_t seed,
                                       covlll_matrix** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    *out = Wrap(covlll::SampleIidArray({m, 1, alpha}, n, seed));
    return COVLLL_OK;
  });
}

covlll_status covlll_matrix_from_entries(int m, int n, int alpha,
                                         const int* entries,
                                         covlll_matrix** out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    Require(m >= 1 && n >= 0, "bad dimensions");
    Require(entries != nullptr || n == 0, "null entries");
    std::vector<std::vector<int>> rows(m, std::vector<int>(n));
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) rows[r][c] = entries[r * n + c];
    }
    covlll::ArrayMatrix matrix = covlll::MatrixFromRows(rows, alpha);
    if (n == 0) matrix = covlll::ArrayMatrix(m, 0, alpha);
    *out = Wrap(std::move(matrix));
    return COVLLL_OK;
  });
}

covlll_status covlll_matrix_parse(const char* text, covlll_matrix** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null pointer");
    *out = Wrap(covlll::ParseMatrix(text));
    return COVLLL_OK;
  });
}

covlll_status covlll_matrix_format(const covlll_matrix* matrix, char** text) {
  return Guard([&] {
    Require(text != nullptr, "null output pointer");
    *text = Dup(covlll::FormatMatrix(Get(matrix)));
    return COVLLL_OK;
  });
}

covlll_status covlll_matrix_load(const char* path, covlll_matrix** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null pointer");
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kIo, std::string("cannot open ") + path);
    *out = Wrap(covlll::ReadMatrix(in));
    return COVLLL_OK;
  });
}

covlll_status covlll_matrix_save(const covlll_matrix* matrix,
                                 const char* path) {
  return Guard([&] {
    Require(path != nullptr, "null path");
    const covlll::ArrayMatrix& value = Get(matrix);
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::kIo, std::string("cannot write ") + path);
    covlll::WriteMatrix(out, value);
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, std::string("write failed: ") + path);
    return COVLLL_OK;
  });
}

void covlll_matrix_free(covlll_matrix* matrix) { delete matrix; }

int covlll_matrix_rows(const covlll_matrix* matrix) {
  return matrix ? matrix->value.rows() : 0;
}

int covlll_matrix_cols(const covlll_matrix* matrix) {
  return matrix ? matrix->value.cols() : 0;
}

int covlll_matrix_alpha(const covlll_matrix* matrix) {
  return matrix ? matrix->value.alpha() : 0;
}

int covlll_matrix_at(const covlll_matrix* matrix, int row, int col) {
  if (matrix == nullptr || row < 0 || col < 0 ||
      row >= matrix->value.rows() || col >= matrix->value.cols()) {
    return 0;
  }
  return matrix->value.at(row, col);
}

covlll_status covlll_verify(const covlll_matrix* matrix, int t, int naive,
                            int* is_covering) {
  return Guard([&] {
    Require(is_covering != nullptr, "null output pointer");
    auto strategy = naive ? covlll::VerifyStrategy::kNaiveScan
                          : covlll::VerifyStrategy::kHashed;
    *is_covering = covlll::IsCovering(Get(matrix), t, strategy) ? 1 : 0;
    return COVLLL_OK;
  });
}

covlll_status covlll_missing_tuples_jsonl(const covlll_matrix* matrix, int t,
                                          uint64_t limit, char** jsonl) {
  return Guard([&] {
    Require(jsonl != nullptr, "null output pointer");
    if (limit == 0) limit = std::numeric_limits<uint64_t>::max();
    covlll::DeficiencyReport report = covlll::MissingTuples(
        Get(matrix), t, covlll::VerifyStrategy::kHashed, limit);
    *jsonl = Dup(covlll::DeficiencyJsonLines(report));
    return COVLLL_OK;
  });
}

covlll_status covlll_coverage_stats(const covlll_matrix* matrix, int t,
                                    covlll_coverage* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    covlll::CoverageStats stats = covlll::ComputeCoverageStats(Get(matrix), t);
    out->covered = stats.covered;
    out->total = stats.total;
    out->min_witness = stats.min_witness;
    return COVLLL_OK;
  });
}

covlll_status covlll_construct(int m, int t, int alpha, int k, int64_t n,
                               uint64_t seed, uint64_t max_resamples,
                               int record_trace, covlll_matrix** out,
                               char** log_json) {
  return Guard([&] {
    Require(out != nullptr && log_json != nullptr, "null output pointer");
    *out = nullptr;
    *log_json = nullptr;
    covlll::CoveringParams params{m, t, alpha};
    covlll::ConstructOptions options;
    if (n > 0) options.n = n;
    options.seed = seed;
    if (max_resamples > 0) options.max_resamples = max_resamples;
    options.record_trace = record_trace != 0;
    covlll::ConstructResult result = covlll::Construct(params, k, options);
    *log_json = Dup(covlll::ConstructionLogJson(result.log, params).dump());
    if (!result.log.success) {
      return Fail(COVLLL_E_CONSTRUCTION_FAILED,
                  "no covering array after " +
                      std::to_string(result.log.resample_count) +
                      " resamples; best deficiency " +
                      std::to_string(result.log.best_missing_count));
    }
    *out = Wrap(std::move(result.matrix));
    return COVLLL_OK;
  });
}

covlll_status covlll_enumerate_gamma(int alpha, int t, int k,
                                     uint64_t work_bound, char** num,
                                     char** den) {
  return Guard([&] {
    Require(num != nullptr && den != nullptr, "null output pointer");
    if (work_bound == 0) work_bound = covlll::DefaultWorkBound();
    SplitRational(covlll::EnumerateGamma(alpha, t, k, work_bound), num, den);
    return COVLLL_OK;
  });
}

covlll_status covlll_estimate_gamma(int alpha, int t, int k, uint64_t trials,
                                    uint64_t seed, const int* target,
                                    int threads, covlll_estimate* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    std::vector<int> vec;
    if (target != nullptr) {
      Require(t >= 1, "t must be >= 1");
      vec.assign(target, target + t);
    }
    FillEstimate(covlll::EstimateGamma(alpha, t, k, trials, seed, vec, threads),
                 out);
    return COVLLL_OK;
  });
}

covlll_status covlll_estimate_lambda(int t, int alpha, int k, int n_core,
                                     uint64_t trials, uint64_t seed,
                                     int threads, covlll_estimate* out) {
  return Guard([&] {
    Require(out != nullptr, "null output pointer");
    FillEstimate(covlll::EstimateLambda({t, t, alpha}, k, n_core, trials, seed,
                                        threads),
                 out);
    return COVLLL_OK;
  });
}

const char* covlll_estimate_csv_header(void) {
  static const std::string header = covlll::EstimateCsvHeader();
  return header.c_str();
}

covlll_status covlll_estimate_csv_row(const char* quantity, int m, int t,
                                      int alpha, int k, int n_core,
                                      const covlll_estimate* est, char** row) {
  return Guard([&] {
    Require(quantity != nullptr && est != nullptr && row != nullptr,
            "null pointer");
    *row = Dup(covlll::EstimateCsvRow(quantity, m, t, alpha, k, n_core,
                                      est->trials, est->estimate,
                                      est->std_error, est->exact, est->z));
    return COVLLL_OK;
  });
}

covlll_status covlll_empirical_min_n_json(int m, int t, int alpha, int k,
                                          uint64_t trials, uint64_t seed,
                                          char** json) {
  return Guard([&] {
    Require(json != nullptr, "null output pointer");
    *json = Dup(
        covlll::MinNJson(covlll::EmpiricalMinN({m, t, alpha}, k, trials, seed))
            .dump());
    return COVLLL_OK;
  });
}

}  // extern "C"
