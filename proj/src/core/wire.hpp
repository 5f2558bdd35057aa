// Copyright 2026 The Thermoscope Authors
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

// JSON wire format shared by the HTTP service, the CLI and stored plans.
//
// Every numeric field name ends in a unit suffix (_m, _k, _deg, _px, ...).
// Temperatures are always kelvin on the wire. Malformed input raises
// bad_request.

#pragma once

#include <filesystem>
#include <functional>
#include <json.hpp>
#include <string_view>

#include "camera_geometry.hpp"
#include "climatology.hpp"
#include "fog.hpp"
#include "planner.hpp"
#include "spectroscopy.hpp"

namespace thermoscope::wire {

using Json = nlohmann::json;

/// Suffixes a numeric field name may end in.
inline constexpr std::string_view kUnitSuffixes[] = {
    "_m", "_k", "_deg", "_px", "_frac", "_kpa", "_pct", "_h", "_min", "_doy", "_per_m", "_per_m3", "_m2", "_cm1", "_count", "_bytes",
};

bool has_unit_suffix(std::string_view key);

Json parse_body(std::string_view body);

const Json& member(const Json& obj, std::string_view key);
double number(const Json& obj, std::string_view key);
double number_or(const Json& obj, std::string_view key, double fallback);
int integer(const Json& obj, std::string_view key);
int integer_or(const Json& obj, std::string_view key, int fallback);
std::string string_or(const Json& obj, std::string_view key, std::string fallback);
bool boolean_or(const Json& obj, std::string_view key, bool fallback);

/// Maps a file reference in a request to a readable local path.
using PathResolver = std::function<std::filesystem::path(const std::string&)>;

/// "tau640", {"preset": "tau640"}, {"config_file": path}, {"config_text": ...}
/// or explicit fields.
CameraModel camera_from_json(const Json& j, const PathResolver& resolve = {});
Json to_json(const CameraModel& camera);

MountConfig mount_from_json(const Json& j);
Json to_json(const MountConfig& mount);

GasConditions conditions_from_json(const Json& j);
Json to_json(const GasConditions& conditions);

FogConditions fog_from_json(const Json& j);
Json to_json(const FogConditions& fog);

Json to_json(const AxisPair& pair, std::string_view suffix);
Json to_json(const GroundFootprint& fp);
Json to_json(const ObservationWindow& w);
Json to_json(const SeasonRange& r);

MissionSpec spec_from_json(const Json& j, const PathResolver& resolve = {});
Json to_json(const MissionSpec& spec);
Json plan_to_json(const MissionPlan& plan);

Json error_body(std::string_view code, std::string_view message);

}  // namespace thermoscope::wire
