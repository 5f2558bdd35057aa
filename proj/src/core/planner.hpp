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

// Mission planning: season, time of day, flight height, optional angled
// mount, and the temperatures the camera should record, with warnings for
// every adjustment or degraded result.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "camera_geometry.hpp"
#include "climatology.hpp"
#include "spectroscopy.hpp"

namespace thermoscope {

struct Site {
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;
  double utc_offset_h = 0.0;
};

struct AnimalSpec {
  double length_min_m = 0.0;
  double length_max_m = 0.0;
  double temp_min_k = 0.0;
  double temp_max_k = 0.0;
};

struct FlightConstraints {
  double min_safe_height_m = 0.0;
  double max_height_m = 120.0;
  int min_pixels = 10;
  double min_contrast_k = 0.0;
};

struct Vegetation {
  double cover_fraction = 0.0;
  double temp_k = 0.0;
};

struct AngledRequest {
  double phi_deg = 45.0;
  double center_range_m = 0.0;
};

struct MissionSpec {
  Site site;
  AnimalSpec animal;
  CameraModel camera;
  FlightConstraints constraints;
  GasConditions conditions;
  std::optional<Vegetation> vegetation;
  int desired_doy = 1;
  std::optional<AngledRequest> angled;
  std::string rain_note;
};

void validate(const MissionSpec& spec);

struct TemperatureRange {
  double low_k = 0.0;
  double high_k = 0.0;
};

struct Warning {
  std::string code;
  std::string message;
};

struct AngledOption {
  double phi_deg = 0.0;
  double height_m = 0.0;  // after clamping
  double unclamped_height_m = 0.0;
  double center_range_m = 0.0;
  std::optional<GroundFootprint> footprint;  // absent when the view reaches the horizon
};

struct MissionPlan {
  MissionSpec spec;
  std::vector<SeasonRange> recommended_dates;
  std::vector<ObservationWindow> time_window;        // solar time
  std::vector<ObservationWindow> time_window_clock;  // local clock time
  double solar_offset_min = 0.0;
  double nadir_height_m = 0.0;  // recommended, after clamping
  TemperatureRange nadir_height_range_m;  // unclamped, shortest to longest animal
  AxisPair nadir_footprint_m;
  std::optional<AngledOption> angled_option;
  double planned_range_m = 0.0;
  TemperatureRange ground_lst;  // climatology over the windows
  TemperatureRange predicted_animal_tobs;
  TemperatureRange predicted_ground_tobs;
  std::optional<double> predicted_obscured_k;
  double expected_contrast_k = 0.0;
  std::vector<Warning> warnings;
  std::vector<std::string> notes;
};

/// Runs the planning recipe. Throws incomplete_day when the climatology has
/// no complete day for `spec.desired_doy`; other shortfalls become warnings.
MissionPlan plan_mission(const MissionSpec& spec, std::span<const LstRecord> climatology,
                         const AbsorptionSpectrum& spectrum);

/// Lowest animal reading minus highest ground reading.
double expected_contrast(const MissionPlan& plan);

struct PlanReport {
  std::string document;  // wire JSON
  std::string text;
};

PlanReport render_report(const MissionPlan& plan);

}  // namespace thermoscope
