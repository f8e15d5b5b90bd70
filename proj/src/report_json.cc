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

#include "report_json.h"

#include <sstream>

namespace covlll {

using nlohmann::json;

json RationalJson(const ExactRational& value) {
  return {{"num", ToDecimalString(ExactInteger(value.get_num()))},
          {"den", ToDecimalString(ExactInteger(value.get_den()))}};
}

json BoundReportJson(const BoundReport& report) {
  return {
      {"m", report.params.m},
      {"t", report.params.t},
      {"alpha", report.params.alpha},
      {"k", report.k},
      {"mode", DegreeModeName(report.mode)},
      {"gamma", RationalJson(report.gamma)},
      {"coefficient", report.coefficient},
      {"sufficient_n", report.sufficient_n},
      {"lll_product", report.lll_product},
      {"augmentation_columns", report.augmentation_columns},
      {"core_n", report.core_n},
      {"dependency_degree_plus_one",
       RationalJson(report.dependency_degree_plus_one)},
  };
}

json CoefficientReportJson(int t, int alpha, int k, DegreeMode mode) {
  ExactRational gamma =
      k == 0 ? MakeRational(1, Pow(ExactInteger(alpha), t)) : GammaK(alpha, t, k);
  return {
      {"m", nullptr},
      {"t", t},
      {"alpha", alpha},
      {"k", k},
      {"mode", DegreeModeName(mode)},
      {"gamma", RationalJson(gamma)},
      {"coefficient", Coefficient(alpha, t, k)},
      {"sufficient_n", nullptr},
      {"lll_product", nullptr},
      {"augmentation_columns", k == 0 ? 0 : alpha},
  };
}

json TableJson(const std::vector<TableRow>& rows) {
  json out = json::array();
  for (const TableRow& row : rows) {
    out.push_back({{"alpha", row.alpha},
                   {"t", row.t},
                   {"k", row.k},
                   {"coefficient", row.coefficient}});
  }
  return out;
}

std::string DeficiencyJsonLines(const DeficiencyReport& report) {
  std::ostringstream out;
  for (const MissingTuple& tuple : report.missing) {
    out << json{{"row_set", tuple.row_set}, {"vector", tuple.vector}}.dump()
        << '\n';
  }
  out << json{{"total_checked", report.total_checked},
              {"missing_count", report.missing_count},
              {"listed", report.missing.size()},
              {"is_covering", report.is_covering}}
             .dump()
      << '\n';
  return out.str();
}

json CoverageStatsJson(const CoverageStats& stats) {
  return {{"covered", stats.covered},
          {"total", stats.total},
          {"min_witness", stats.min_witness},
          {"min_witness_per_row_set", stats.min_witness_per_row_set}};
}

json ConstructionLogJson(const ConstructionLog& log,
                         const CoveringParams& params) {
  json out = {
      {"m", params.m},
      {"t", params.t},
      {"alpha", params.alpha},
      {"k", log.k},
      {"seed", log.seed},
      {"success", log.success},
      {"resample_count", log.resample_count},
      {"max_resamples", log.max_resamples},
      {"final_n", log.final_n},
      {"core_n", log.core_n},
      {"augmentation_columns", log.final_n - log.core_n},
      {"final_missing_count", log.final_missing_count},
      {"best_missing_count", log.best_missing_count},
      {"wall_seconds", log.wall_seconds},
  };
  if (!log.trace.empty()) {
    json trace = json::array();
    for (const MissingTuple& event : log.trace) {
      trace.push_back({{"row_set", event.row_set}, {"vector", event.vector}});
    }
    out["trace"] = std::move(trace);
  }
  return out;
}

json EstimateJson(const EstimateReport& report) {
  json out = {{"trials", report.trials},
              {"hits", report.hits},
              {"estimate", report.estimate},
              {"stderr", report.std_error},
              {"z", report.z}};
  if (report.exact) {
    out["exact"] = RationalJson(*report.exact);
    out["exact_value"] = ToDouble(*report.exact);
  }
  return out;
}

json MinNJson(const MinNSummary& summary) {
  return {{"samples", summary.samples},
          {"min", summary.min},
          {"median", summary.median},
          {"max", summary.max},
          {"sufficient_n", summary.sufficient_n},
          {"trials_above_bound", summary.trials_above_bound}};
}

}  // namespace covlll
