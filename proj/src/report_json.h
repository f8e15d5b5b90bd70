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

// JSON views of the library's reports. Exact rationals are written as
// {"num": "<decimal>", "den": "<decimal>"} so their size is unbounded.

#ifndef COVLLL_SRC_REPORT_JSON_H_
#define COVLLL_SRC_REPORT_JSON_H_

#include <optional>
#include <string>
#include <vector>

#include "bounds.h"
#include "construct.h"
#include "json.hpp"
#include "montecarlo.h"
#include "verify.h"

namespace covlll {

nlohmann::json RationalJson(const ExactRational& value);

// Full report when m is known.
nlohmann::json BoundReportJson(const BoundReport& report);

// Coefficient-only report (no m): m, sufficient_n and lll_product are null.
nlohmann::json CoefficientReportJson(int t, int alpha, int k, DegreeMode mode);

nlohmann::json TableJson(const std::vector<TableRow>& rows);

// One JSON object per missing tuple, then a summary line.
std::string DeficiencyJsonLines(const DeficiencyReport& report);

nlohmann::json CoverageStatsJson(const CoverageStats& stats);

nlohmann::json ConstructionLogJson(const ConstructionLog& log,
                                   const CoveringParams& params);

nlohmann::json EstimateJson(const EstimateReport& report);

nlohmann::json MinNJson(const MinNSummary& summary);

}  // namespace covlll

#endif  // COVLLL_SRC_REPORT_JSON_H_
