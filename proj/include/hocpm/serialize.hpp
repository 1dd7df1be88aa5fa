// Copyright 2026 The hocpm Authors
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

#pragma once

#include <json.hpp>

#include "hocpm/cpm.hpp"

namespace hocpm {

using json = nlohmann::ordered_json;

json semiring_to_json(SemiringDescriptor sr);
SemiringDescriptor semiring_from_json(const json& j);

json value_to_json(const SemiringValue& x);
SemiringValue value_from_json(SemiringDescriptor sr, const json& j);

json action_to_json(const GroupAction& action);
GroupAction action_from_json(const json& j);

json matrix_to_json(const Matrix& m);
/** Reads {"semiring", "rows", "cols", "entries"}; a default semiring may stand in for a missing tag. */
Matrix matrix_from_json(const json& j, const SemiringDescriptor* fallback = nullptr);

/**
 * {"rule": "standard_trace" | "caps" | "explicit" | "product" | "join", ...}.
 * Explicit structures carry "generators": {"n": [matrix, ...]} and an
 * optional "check": false to skip the equivariance check.
 **/
json env_to_json(const EnvStructure& env);
EnvStructure env_from_json(const json& j);

json env_report_to_json(const std::vector<EnvReportEntry>& report);

/** Parses text as JSON, mapping syntax errors to ParseError. */
json parse_json(const std::string& text);

}  // namespace hocpm
