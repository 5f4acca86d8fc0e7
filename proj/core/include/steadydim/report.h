// Copyright 2026 The steadydim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef STEADYDIM_REPORT_H_
#define STEADYDIM_REPORT_H_

#include <string>

#include <nlohmann/json.hpp>

#include "steadydim/network.h"
#include "steadydim/nondegen.h"

namespace steadydim {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// JSON schema v1. Rationals are strings ("3", "-1/2"); absent witnesses and
// certificates are null.
Json ToJson(const AnalysisReport& report);
/// Inverse of ToJson. Throws std::invalid_argument on schema violations.
AnalysisReport ReportFromJson(const Json& j);

Json ToJson(const SteadyStateCheck& check);
Json ToJson(const NetworkMatrices& mats);

// Plain-text renderings for the command-line tool.
std::string DescribeConclusion(DimensionConclusion c, std::size_t expected_dim);
std::string DescribeConclusion(FinitenessConclusion c);
std::string RenderText(const AnalysisReport& report);
std::string RenderText(const SteadyStateCheck& check);
std::string RenderText(const NetworkMatrices& mats);

}  // namespace steadydim

#endif  // STEADYDIM_REPORT_H_
