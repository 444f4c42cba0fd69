// Copyright 2026 The Hardy-Heisenberg Authors
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

// JSON encodings of the core result types (field names are part of the
// stable report schema).

#ifndef HARDY_CLI_JSON_IO_HPP_
#define HARDY_CLI_JSON_IO_HPP_

#include "json.hpp"

#include "hardy/constants.hpp"
#include "hardy/decomposition.hpp"
#include "hardy/functional.hpp"
#include "hardy/geometry.hpp"
#include "hardy/group.hpp"
#include "hardy/verify.hpp"

namespace hardy {

void to_json(nlohmann::json& j, const GroupPoint& p);
void to_json(nlohmann::json& j, const HardyParams& q);
void to_json(nlohmann::json& j, const ContractionSchedule& c);
void to_json(nlohmann::json& j, const DistanceResult& d);
void to_json(nlohmann::json& j, const HalfCellIndex& idx);
void to_json(nlohmann::json& j, const WholeCellIndex& idx);
void to_json(nlohmann::json& j, const GeometryReport& r);
void to_json(nlohmann::json& j, const PartitionReport& r);
void to_json(nlohmann::json& j, const Estimate& e);
void to_json(nlohmann::json& j, const SeminormEstimate& e);
void to_json(nlohmann::json& j, const QuotientEstimate& e);
void to_json(nlohmann::json& j, const Membership& m);
void to_json(nlohmann::json& j, const PointwiseCheck& c);
void to_json(nlohmann::json& j, const OptimizeResult& r);
void to_json(nlohmann::json& j, const GroupCheckReport& r);
void to_json(nlohmann::json& j, const DistanceCheckReport& r);
void to_json(nlohmann::json& j, const LemmaSweep& s);
void to_json(nlohmann::json& j, const PointwiseSweep& s);

// JSON has no infinity; non-finite values are written as null.
nlohmann::json finite_or_null(double v);

}  // namespace hardy

#endif  // HARDY_CLI_JSON_IO_HPP_
