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

#include "wire.hpp"

#include "error.hpp"

namespace thermoscope::wire {

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::bad_request, message); }

}  // namespace

bool has_unit_suffix(std::string_view key) {
  for (const auto suffix : kUnitSuffixes) {
    if (key.size() > suffix.size() && key.substr(key.size() - suffix.size()) == suffix) return true;
  }
  return false;
}

Json parse_body(std::string_view body) {
  if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) return Json::object();
  auto j = Json::parse(body, nullptr, false);
  if (j.is_discarded()) bad("request body is not valid JSON");
  if (!j.is_object()) bad("request body must be a JSON object");
  return j;
}

const Json& member(const Json& obj, std::string_view key) {
  if (!obj.is_object()) bad("expected an object holding '" + std::string(key) + "'");
  const auto it = obj.find(key);
  if (it == obj.end()) bad("missing field '" + std::string(key) + "'");
  return *it;
}

double number(const Json& obj, std::string_view key) {
  const auto& v = member(obj, key);
  if (!v.is_number()) bad("field '" + std::string(key) + "' must be a number");
  return v.get<double>();
}

double number_or(const Json& obj, std::string_view key, double fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return number(obj, key);
}

int integer(const Json& obj, std::string_view key) {
  const auto& v = member(obj, key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number_float() && v.get<double>() == static_cast<int>(v.get<double>())) return static_cast<int>(v.get<double>());
  bad("field '" + std::string(key) + "' must be an integer");
}

int integer_or(const Json& obj, std::string_view key, int fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  return integer(obj, key);
}

std::string string_or(const Json& obj, std::string_view key, std::string fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  const auto& v = obj.at(std::string(key));
  if (!v.is_string()) bad("field '" + std::string(key) + "' must be a string");
  return v.get<std::string>();
}

bool boolean_or(const Json& obj, std::string_view key, bool fallback) {
  if (!obj.is_object() || !obj.contains(key)) return fallback;
  const auto& v = obj.at(std::string(key));
  if (!v.is_boolean()) bad("field '" + std::string(key) + "' must be true or false");
  return v.get<bool>();
}

CameraModel camera_from_json(const Json& j, const PathResolver& resolve) {
  if (j.is_string()) return camera_preset(j.get<std::string>());
  if (!j.is_object()) bad("camera must be a preset name or an object");
  if (j.contains("preset")) return camera_preset(string_or(j, "preset", ""));
  if (j.contains("config_text")) return parse_camera_config(string_or(j, "config_text", ""));
  if (j.contains("config_file")) {
    const auto name = string_or(j, "config_file", "");
    return load_camera_config(resolve ? resolve(name) : std::filesystem::path(name));
  }
  CameraModel c;
  c.pixels_x = integer(j, "pixels_x_px");
  c.pixels_y = integer(j, "pixels_y_px");
  c.fov_x_deg = number(j, "fov_x_deg");
  c.fov_y_deg = number(j, "fov_y_deg");
  c.relative_sensitivity_k = number_or(j, "relative_sensitivity_k", c.relative_sensitivity_k);
  c.absolute_accuracy_k = number_or(j, "absolute_accuracy_k", c.absolute_accuracy_k);
  validate(c);
  return c;
}

Json to_json(const CameraModel& c) {
  return {{"pixels_x_px", c.pixels_x},
          {"pixels_y_px", c.pixels_y},
          {"fov_x_deg", c.fov_x_deg},
          {"fov_y_deg", c.fov_y_deg},
          {"relative_sensitivity_k", c.relative_sensitivity_k},
          {"absolute_accuracy_k", c.absolute_accuracy_k}};
}

MountConfig mount_from_json(const Json& j) {
  MountConfig m{number_or(j, "phi_deg", 0.0), number(j, "height_m")};
  validate(m);
  return m;
}

Json to_json(const MountConfig& m) { return {{"phi_deg", m.phi_deg}, {"height_m", m.height_m}}; }

GasConditions conditions_from_json(const Json& j) {
  GasConditions g;
  if (j.is_null()) return g;
  g.air_k = number_or(j, "air_k", g.air_k);
  g.pressure_kpa = number_or(j, "pressure_kpa", g.pressure_kpa);
  g.rh_pct = number_or(j, "rh_pct", g.rh_pct);
  validate(g);
  return g;
}

Json to_json(const GasConditions& g) {
  return {{"air_k", g.air_k}, {"pressure_kpa", g.pressure_kpa}, {"rh_pct", g.rh_pct}};
}

FogConditions fog_from_json(const Json& j) {
  FogConditions f;
  if (j.is_null()) return f;
  f.droplet_diameter_m = number_or(j, "droplet_diameter_m", f.droplet_diameter_m);
  f.number_density_per_m3 = number_or(j, "number_density_per_m3", f.number_density_per_m3);
  f.depth_m = number_or(j, "depth_m", f.depth_m);
  f.air_k = number_or(j, "air_k", f.air_k);
  validate(f);
  return f;
}

Json to_json(const FogConditions& f) {
  return {{"droplet_diameter_m", f.droplet_diameter_m},
          {"number_density_per_m3", f.number_density_per_m3},
          {"depth_m", f.depth_m},
          {"air_k", f.air_k}};
}

Json to_json(const AxisPair& pair, std::string_view suffix) {
  return {{"x" + std::string(suffix), pair.x}, {"y" + std::string(suffix), pair.y}};
}

Json to_json(const GroundFootprint& fp) {
  return {{"d_c_m", fp.d_c}, {"d_m_m", fp.d_m}, {"d_f_m", fp.d_f}, {"w_c_m", fp.w_c}, {"w_m_m", fp.w_m},
          {"w_f_m", fp.w_f}, {"r_c_m", fp.r_c}, {"r_m_m", fp.r_m}, {"r_f_m", fp.r_f}};
}

Json to_json(const ObservationWindow& w) {
  return {{"start_h", w.start_h}, {"end_h", w.end_h}, {"worst_case_contrast_k", w.worst_case_contrast_k}};
}

Json to_json(const SeasonRange& r) {
  return {{"start_doy", r.start_doy},
          {"end_doy", r.end_doy},
          {"mean_daily_min_k", r.mean_daily_min_k},
          {"best_contrast_k", r.best_contrast_k}};
}

MissionSpec spec_from_json(const Json& j, const PathResolver& resolve) {
  if (!j.is_object()) bad("mission spec must be an object");
  MissionSpec s;
  const auto& site = member(j, "site");
  s.site = {number(site, "latitude_deg"), number(site, "longitude_deg"), number_or(site, "utc_offset_h", 0.0)};
  const auto& animal = member(j, "animal");
  s.animal = {number(animal, "length_min_m"), number_or(animal, "length_max_m", number(animal, "length_min_m")),
              number(animal, "temp_min_k"), number_or(animal, "temp_max_k", number(animal, "temp_min_k"))};
  s.camera = j.contains("camera") ? camera_from_json(j.at("camera"), resolve) : tau640_camera();
  if (j.contains("constraints")) {
    const auto& c = j.at("constraints");
    s.constraints.min_safe_height_m = number_or(c, "min_safe_height_m", s.constraints.min_safe_height_m);
    s.constraints.max_height_m = number_or(c, "max_height_m", s.constraints.max_height_m);
    s.constraints.min_pixels = integer_or(c, "min_px", s.constraints.min_pixels);
    s.constraints.min_contrast_k = number_or(c, "min_contrast_k", s.constraints.min_contrast_k);
  }
  s.conditions = j.contains("conditions") ? conditions_from_json(j.at("conditions")) : GasConditions{};
  if (j.contains("vegetation") && !j.at("vegetation").is_null()) {
    const auto& v = j.at("vegetation");
    s.vegetation = Vegetation{number(v, "cover_frac"), number(v, "temp_k")};
  }
  s.desired_doy = integer(j, "desired_date_doy");
  if (j.contains("angled") && !j.at("angled").is_null()) {
    const auto& a = j.at("angled");
    s.angled = AngledRequest{number(a, "phi_deg"), number(a, "center_range_m")};
  }
  s.rain_note = string_or(j, "rain_note", "");
  validate(s);
  return s;
}

Json to_json(const MissionSpec& s) {
  Json j = {
      {"site",
       {{"latitude_deg", s.site.latitude_deg},
        {"longitude_deg", s.site.longitude_deg},
        {"utc_offset_h", s.site.utc_offset_h}}},
      {"animal",
       {{"length_min_m", s.animal.length_min_m},
        {"length_max_m", s.animal.length_max_m},
        {"temp_min_k", s.animal.temp_min_k},
        {"temp_max_k", s.animal.temp_max_k}}},
      {"camera", to_json(s.camera)},
      {"constraints",
       {{"min_safe_height_m", s.constraints.min_safe_height_m},
        {"max_height_m", s.constraints.max_height_m},
        {"min_px", s.constraints.min_pixels},
        {"min_contrast_k", s.constraints.min_contrast_k}}},
      {"conditions", to_json(s.conditions)},
      {"desired_date_doy", s.desired_doy},
      {"rain_note", s.rain_note},
  };
  j["vegetation"] = s.vegetation ? Json{{"cover_frac", s.vegetation->cover_fraction}, {"temp_k", s.vegetation->temp_k}}
                                 : Json(nullptr);
  j["angled"] = s.angled ? Json{{"phi_deg", s.angled->phi_deg}, {"center_range_m", s.angled->center_range_m}}
                         : Json(nullptr);
  return j;
}

namespace {

Json range_json(const TemperatureRange& r, std::string_view suffix) {
  return {{"low" + std::string(suffix), r.low_k}, {"high" + std::string(suffix), r.high_k}};
}

template <typename T>
Json list_json(const std::vector<T>& items) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(to_json(item));
  return out;
}

}  // namespace

Json plan_to_json(const MissionPlan& p) {
  Json j;
  j["spec"] = to_json(p.spec);
  j["recommended_dates"] = list_json(p.recommended_dates);
  j["time_window_solar"] = list_json(p.time_window);
  j["time_window_clock"] = list_json(p.time_window_clock);
  j["solar_offset_min"] = p.solar_offset_min;
  j["nadir_height_m"] = p.nadir_height_m;
  j["nadir_height_range"] = range_json(p.nadir_height_range_m, "_m");
  j["nadir_footprint"] = to_json(p.nadir_footprint_m, "_m");
  if (p.angled_option) {
    const auto& a = *p.angled_option;
    j["angled_option"] = {{"phi_deg", a.phi_deg},
                          {"height_m", a.height_m},
                          {"unclamped_height_m", a.unclamped_height_m},
                          {"center_range_m", a.center_range_m},
                          {"footprint", a.footprint ? to_json(*a.footprint) : Json(nullptr)}};
  } else {
    j["angled_option"] = nullptr;
  }
  j["planned_range_m"] = p.planned_range_m;
  j["ground_lst"] = range_json(p.ground_lst, "_k");
  j["predicted_animal_tobs"] = range_json(p.predicted_animal_tobs, "_k");
  j["predicted_ground_tobs"] = range_json(p.predicted_ground_tobs, "_k");
  j["predicted_obscured_k"] = p.predicted_obscured_k ? Json(*p.predicted_obscured_k) : Json(nullptr);
  j["expected_contrast_k"] = p.expected_contrast_k;
  Json warnings = Json::array();
  for (const auto& w : p.warnings) warnings.push_back({{"code", w.code}, {"message", w.message}});
  j["warnings"] = warnings;
  j["notes"] = p.notes;
  return j;
}

Json error_body(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace thermoscope::wire
