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

#include "planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "error.hpp"
#include "radiative_transfer.hpp"
#include "scene_blending.hpp"
#include "units.hpp"
#include "wire.hpp"

namespace thermoscope {

void validate(const MissionSpec& spec) {
  validate(spec.camera);
  validate(spec.conditions);
  require(std::abs(spec.site.latitude_deg) <= 90.0, "site latitude must lie in [-90, 90]");
  require(std::abs(spec.site.longitude_deg) <= 180.0, "site longitude must lie in [-180, 180]");
  require(spec.animal.length_min_m > 0.0 && spec.animal.length_min_m <= spec.animal.length_max_m,
          "animal lengths must be positive and ordered");
  require(spec.animal.temp_min_k > 0.0 && spec.animal.temp_min_k <= spec.animal.temp_max_k,
          "animal temperatures must be positive kelvin and ordered");
  require(spec.constraints.min_safe_height_m >= 0.0 &&
              spec.constraints.min_safe_height_m <= spec.constraints.max_height_m &&
              spec.constraints.max_height_m > 0.0,
          "height constraints must satisfy 0 <= min_safe <= max");
  require(spec.constraints.min_pixels >= 1, "minimum pixel count must be >= 1");
  require(spec.constraints.min_contrast_k >= 0.0, "minimum contrast must be >= 0");
  require(spec.desired_doy >= 1 && spec.desired_doy <= 366, "desired date must be a day of year in 1..366");
  if (spec.vegetation) {
    require(spec.vegetation->cover_fraction >= 0.0 && spec.vegetation->cover_fraction <= 1.0,
            "vegetation cover must lie in [0, 1]");
    require(spec.vegetation->temp_k > 0.0, "vegetation temperature must be positive kelvin");
  }
  if (spec.angled) {
    require(spec.angled->phi_deg >= 0.0 && spec.angled->phi_deg < 90.0, "angled phi must lie in [0, 90)");
    require(spec.angled->center_range_m > 0.0, "angled centre range must be positive");
  }
}

namespace {

std::string fixed(double v, int digits) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

double clamp_height(double h, const FlightConstraints& c, const char* what, std::vector<Warning>& warnings) {
  const double clamped = std::clamp(h, c.min_safe_height_m, c.max_height_m);
  if (clamped != h) {
    warnings.push_back({"height_clamped", std::string(what) + " height " + fixed(h, 1) + " m moved to " +
                                              fixed(clamped, 1) + " m by the flight constraints"});
  }
  return clamped;
}

ObservationWindow to_clock(const ObservationWindow& w, double offset_min) {
  ObservationWindow c = w;
  c.start_h -= offset_min / 60.0;
  c.end_h -= offset_min / 60.0;
  if (c.start_h < 0.0) {
    c.start_h += 24.0;
    c.end_h += 24.0;
  } else if (c.start_h >= 24.0) {
    c.start_h -= 24.0;
    c.end_h -= 24.0;
  }
  return c;
}

}  // namespace

MissionPlan plan_mission(const MissionSpec& spec, std::span<const LstRecord> climatology,
                         const AbsorptionSpectrum& spectrum) {
  validate(spec);
  validate(spectrum);
  MissionPlan plan;
  plan.spec = spec;
  auto& warnings = plan.warnings;
  const auto& c = spec.constraints;

  const auto curve = diurnal_curve(climatology, spec.desired_doy);

  try {
    auto ranges = best_season(climatology, spec.animal.temp_min_k);
    if (ranges.size() > 3) ranges.resize(3);
    plan.recommended_dates = std::move(ranges);
    const bool inside = std::any_of(plan.recommended_dates.begin(), plan.recommended_dates.end(), [&](const SeasonRange& r) {
      return r.start_doy <= r.end_doy ? spec.desired_doy >= r.start_doy && spec.desired_doy <= r.end_doy
                                      : spec.desired_doy >= r.start_doy || spec.desired_doy <= r.end_doy;
    });
    if (!inside) {
      warnings.push_back({"date_outside_best_season", "day " + std::to_string(spec.desired_doy) +
                                                          " is not in a recommended coolest-season range"});
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::insufficient_coverage) throw;
    warnings.push_back({"season_unavailable", e.what()});
  }

  plan.time_window = contrast_windows(curve, spec.animal.temp_min_k, c.min_contrast_k);
  plan.solar_offset_min = solar_time_offset_min(spec.site.longitude_deg, spec.site.utc_offset_h, spec.desired_doy);
  for (const auto& w : plan.time_window) plan.time_window_clock.push_back(to_clock(w, plan.solar_offset_min));
  if (plan.time_window.empty()) {
    warnings.push_back({"windows_empty", "ground (mean + 2 sigma) never sits " + fixed(c.min_contrast_k, 2) +
                                             " K below the coolest animal temperature on day " +
                                             std::to_string(spec.desired_doy)});
  }

  // Shortest animal sets the resolution limit.
  plan.nadir_height_range_m = {height_for_target(spec.camera, spec.animal.length_min_m, c.min_pixels),
                               height_for_target(spec.camera, spec.animal.length_max_m, c.min_pixels)};
  plan.nadir_height_m = clamp_height(plan.nadir_height_range_m.low_k, c, "nadir", warnings);
  if (plan.nadir_height_m > plan.nadir_height_range_m.low_k) {
    warnings.push_back({"resolution_below_min_px", "at " + fixed(plan.nadir_height_m, 1) +
                                                       " m the shortest animal spans fewer than " +
                                                       std::to_string(c.min_pixels) + " pixels"});
  }
  plan.nadir_footprint_m = nadir_footprint(spec.camera, plan.nadir_height_m);
  plan.planned_range_m = plan.nadir_height_m;

  if (spec.angled) {
    AngledOption option;
    option.phi_deg = spec.angled->phi_deg;
    option.center_range_m = spec.angled->center_range_m;
    option.unclamped_height_m = height_for_center_range(spec.camera, option.phi_deg, option.center_range_m);
    option.height_m = clamp_height(option.unclamped_height_m, c, "angled", warnings);
    try {
      option.footprint = angled_footprint(spec.camera, {option.phi_deg, option.height_m});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::horizon) throw;
      warnings.push_back({"angled_horizon", "at phi " + fixed(option.phi_deg, 1) +
                                                " deg the top of the field of view reaches the horizon"});
    }
    plan.planned_range_m = option.height_m / std::cos(radians(option.phi_deg));
    plan.angled_option = option;
    plan.notes.push_back(
        "Straight down allows simpler analysis; an angled mount sees beneath cover but the far field is mostly "
        "vegetation.");
  }

  // Ground climatology over the feasible windows, or the whole day if none.
  double lst_low = std::numeric_limits<double>::infinity();
  double lst_high = -lst_low;
  auto visit = [&](int m) {
    const double t = m / 60.0;
    lst_low = std::min(lst_low, curve.mean(t) - curve.two_sigma(t));
    lst_high = std::max(lst_high, curve.upper(t));
  };
  if (plan.time_window.empty()) {
    for (int m = 0; m < kMinutesPerDay; ++m) visit(m);
  } else {
    for (const auto& w : plan.time_window) {
      for (int m = static_cast<int>(std::lround(w.start_h * 60.0)); m < std::lround(w.end_h * 60.0); ++m) visit(m);
    }
  }
  plan.ground_lst = {lst_low, lst_high};

  const double medium = spec.conditions.air_k;
  auto observe = [&](double source_k) {
    const BandTransmission transmission(spectrum, source_k, medium);
    return observed_temperature(source_k, transmission(plan.planned_range_m));
  };
  plan.predicted_animal_tobs = {observe(spec.animal.temp_min_k), observe(spec.animal.temp_max_k)};
  plan.predicted_ground_tobs = {observe(plan.ground_lst.low_k), observe(plan.ground_lst.high_k)};

  if (spec.vegetation) {
    const auto& v = *spec.vegetation;
    plan.predicted_obscured_k = obscured_temperature(spec.animal.temp_min_k, v.temp_k, v.cover_fraction);
    const double gap = std::abs(*plan.predicted_obscured_k - v.temp_k);
    if (gap < spec.camera.relative_sensitivity_k) {
      warnings.push_back({"obscured_low_contrast", "an animal under cover differs from the vegetation by " +
                                                       fixed(gap, 3) + " K, below the camera sensitivity"});
    } else {
      plan.notes.push_back("Under " + fixed(v.cover_fraction * 100.0, 0) + "% cover the animal reads " +
                           fixed(*plan.predicted_obscured_k, 2) + " K, only " + fixed(gap, 2) +
                           " K from the vegetation.");
    }
  }

  plan.expected_contrast_k = expected_contrast(plan);
  if (plan.expected_contrast_k <= 0.0) {
    warnings.push_back({"tir_advantage_lost", "ground can read as warm as the animal (contrast " +
                                                  fixed(plan.expected_contrast_k, 2) + " K)"});
  } else if (plan.expected_contrast_k < spec.camera.relative_sensitivity_k) {
    warnings.push_back({"low_contrast", "expected contrast " + fixed(plan.expected_contrast_k, 3) +
                                            " K is below the camera sensitivity"});
  }
  if (!spec.rain_note.empty()) plan.notes.push_back("Rainfall: " + spec.rain_note);
  return plan;
}

double expected_contrast(const MissionPlan& plan) {
  return plan.predicted_animal_tobs.low_k - plan.predicted_ground_tobs.high_k;
}

namespace {

std::string clock_text(double h) {
  const int minutes = static_cast<int>(std::lround(h * 60.0)) % (48 * 60);
  char buf[48];
  std::snprintf(buf, sizeof buf, "%02d:%02d", minutes / 60, minutes % 60);
  return buf;
}

std::string range_text(const TemperatureRange& r, const char* unit, int digits) {
  return fixed(r.low_k, digits) + "-" + fixed(r.high_k, digits) + " " + unit;
}

}  // namespace

PlanReport render_report(const MissionPlan& plan) {
  PlanReport report;
  report.document = wire::plan_to_json(plan).dump(2) + "\n";

  std::string t;
  auto line = [&t](const std::string& s) { t += s + "\n"; };
  line("Mission plan, day " + std::to_string(plan.spec.desired_doy));
  line("1. Season");
  if (plan.recommended_dates.empty()) line("   no recommended range");
  for (const auto& r : plan.recommended_dates) {
    line("   days " + std::to_string(r.start_doy) + "-" + std::to_string(r.end_doy) + ", daily minimum " +
         fixed(r.mean_daily_min_k, 2) + " K");
  }
  line("2. Time of day (solar offset " + fixed(plan.solar_offset_min, 1) + " min)");
  if (plan.time_window.empty()) line("   no window");
  for (std::size_t i = 0; i < plan.time_window.size(); ++i) {
    const auto& s = plan.time_window[i];
    const auto& c = plan.time_window_clock[i];
    line("   solar " + clock_text(s.start_h) + "-" + clock_text(s.end_h) + ", clock " + clock_text(c.start_h) + "-" +
         clock_text(c.end_h) + ", worst contrast " + fixed(s.worst_case_contrast_k, 2) + " K");
  }
  line("3. Height");
  line("   nadir " + fixed(plan.nadir_height_m, 1) + " m (range " + range_text(plan.nadir_height_range_m, "m", 1) + ")");
  line("   footprint " + fixed(plan.nadir_footprint_m.x, 1) + " x " + fixed(plan.nadir_footprint_m.y, 1) + " m");
  if (plan.angled_option) {
    const auto& a = *plan.angled_option;
    line("   angled phi " + fixed(a.phi_deg, 1) + " deg, height " + fixed(a.height_m, 1) + " m");
    if (a.footprint) {
      line("   angled footprint D_F-D_C " + fixed(a.footprint->d_f - a.footprint->d_c, 1) + " m, W_C " +
           fixed(a.footprint->w_c, 1) + " m, W_F " + fixed(a.footprint->w_f, 1) + " m");
    }
  }
  line("4. Atmosphere at " + fixed(plan.planned_range_m, 1) + " m");
  line("   animal " + range_text(plan.predicted_animal_tobs, "K", 2));
  line("   ground " + range_text(plan.predicted_ground_tobs, "K", 2));
  line("   expected contrast " + fixed(plan.expected_contrast_k, 2) + " K");
  line("5. Vegetation");
  if (plan.predicted_obscured_k) {
    line("   obscured animal " + fixed(*plan.predicted_obscured_k, 2) + " K");
  } else {
    line("   not given");
  }
  if (plan.warnings.empty()) {
    line("warnings: none");
  } else {
    line("warnings:");
    for (const auto& w : plan.warnings) line("   " + w.code + ": " + w.message);
  }
  for (const auto& n : plan.notes) line("note: " + n);
  report.text = std::move(t);
  return report;
}

}  // namespace thermoscope
