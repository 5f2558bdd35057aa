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

// Requests shared by the wire, service, parity and acceptance tests. Each
// vector pairs a /v1 request with the CLI arguments that should produce the
// same response body.

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace testing {

struct RequestVector {
  std::string name;
  std::string method;
  std::string path;
  nlohmann::json body;
  std::vector<std::string> cli;  // empty when the route has no subcommand
  int status = 200;
};

/// A data directory holding the bundled data plus a 9x7 test camera, so
/// corrections grids stay small enough to return inline.
inline void make_test_data_dir(const std::filesystem::path& root, const std::filesystem::path& bundled) {
  namespace fs = std::filesystem;
  for (const char* sub : {"spectra", "climatology", "lines", "optics", "missions"}) {
    fs::create_directory_symlink(fs::absolute(bundled / sub), root / sub);
  }
  fs::create_directories(root / "cameras");
  fs::copy_file(bundled / "cameras" / "tau640.cfg", root / "cameras" / "tau640.cfg");
  std::ofstream(root / "cameras" / "tiny.cfg") << "# test camera\npixels_x=9\npixels_y=7\nfov_x_deg=30\nfov_y_deg=24\n";
}

inline std::vector<RequestVector> request_vectors(const std::filesystem::path& mission_file) {
  using nlohmann::json;
  std::ifstream in(mission_file);
  const auto mission = json::parse(in);
  const json tau = {{"preset", "tau640"}};
  const json tiny = {{"config_file", "cameras/tiny.cfg"}};
  std::vector<RequestVector> v;
  auto add = [&v](std::string name, std::string path, json body, std::vector<std::string> cli, int status = 200) {
    v.push_back({std::move(name), "POST", std::move(path), std::move(body), std::move(cli), status});
  };

  add("height_target", "/v1/geometry/height", {{"camera", tau}, {"axis", "x"}, {"target_m", 0.25}, {"min_px", 10}},
      {"height", "--target-m", "0.25", "--min-px", "10"});
  add("height_pixel_scale", "/v1/geometry/height", {{"camera", tau}, {"axis", "y"}, {"pixel_scale_m", 0.1}},
      {"height", "--pixel-scale-m", "0.1", "--axis", "y"});
  add("height_center_range", "/v1/geometry/height",
      {{"camera", tau}, {"axis", "x"}, {"center_range_m", 81.5}, {"phi_deg", 60.0}},
      {"height", "--center-range-m", "81.5", "--phi-deg", "60"});
  add("height_camera_file", "/v1/geometry/height",
      {{"camera", {{"config_file", "cameras/tau640.cfg"}}}, {"axis", "x"}, {"target_m", 1.0}, {"min_px", 10}},
      {"height", "--camera", "cameras/tau640.cfg", "--target-m", "1"});
  add("height_bad_target", "/v1/geometry/height", {{"camera", tau}, {"axis", "x"}, {"target_m", -1.0}, {"min_px", 10}},
      {"height", "--target-m", "-1"}, 400);
  add("footprint_nadir", "/v1/geometry/footprint", {{"camera", tau}, {"height_m", 81.5}, {"phi_deg", 0.0}},
      {"footprint", "--height-m", "81.5"});
  add("footprint_angled", "/v1/geometry/footprint",
      {{"camera", tau}, {"height_m", 15.0}, {"phi_deg", 45.0}, {"rows_px", {0.0, 256.0, 512.0}}},
      {"footprint", "--height-m", "15", "--phi-deg", "45", "--row", "0", "--row", "256", "--row", "512"});
  add("footprint_horizon", "/v1/geometry/footprint", {{"camera", tau}, {"height_m", 15.0}, {"phi_deg", 80.0}},
      {"footprint", "--height-m", "15", "--phi-deg", "80"}, 400);
  add("atmosphere_representative", "/v1/atmosphere/transmission",
      {{"spectrum", {{"preset", "representative"}}}, {"source_k", 298.15}, {"medium_k", 273.15},
       {"distances_m", {0.0, 50.0, 100.0}}},
      {"atmosphere", "--source-k", "298.15", "--medium-k", "273.15", "--distance-m", "0", "--distance-m", "50",
       "--distance-m", "100"});
  add("atmosphere_gray", "/v1/atmosphere/transmission",
      {{"spectrum", {{"gray_kappa_per_m", 1e-3}}}, {"source_k", 300.0}, {"medium_k", 280.0},
       {"distances_m", {10.0, 1000.0}}},
      {"atmosphere", "--gray-kappa-per-m", "1e-3", "--source-k", "300", "--medium-k", "280", "--distance-m", "10",
       "--distance-m", "1000"});
  add("atmosphere_table", "/v1/atmosphere/transmission",
      {{"spectrum", {{"table_file", "spectra/gray_1e-4.csv"}}}, {"source_k", 300.0}, {"medium_k", 280.0},
       {"distances_m", {500.0}}},
      {"atmosphere", "--spectrum", "spectra/gray_1e-4.csv", "--source-k", "300", "--medium-k", "280",
       "--distance-m", "500"});
  add("fog_transmission", "/v1/fog/transmission", {{"distances_m", {1.0, 10.0, 100.0}}},
      {"fog", "--distance-m", "1", "--distance-m", "10", "--distance-m", "100"});
  add("fog_visible", "/v1/fog/transmission", {{"wavelength_m", 0.55e-6}, {"distances_m", {1.0}}},
      {"fog", "--wavelength-m", "0.55e-6", "--distance-m", "1"});
  add("fog_delta", "/v1/fog/delta",
      {{"source_k", 298.15}, {"fog", {{"depth_m", 20.0}}}, {"spectrum", {{"preset", "saturated_water"}}}},
      {"fog", "--source-k", "298.15", "--depth-m", "20"});
  add("blend_components", "/v1/blend",
      {{"components", {{{"t_k", 293.15}, {"area_frac", 0.5}}, {{"t_k", 288.15}, {"area_frac", 0.5}}}}},
      {"blend", "--component", "293.15:0.5", "--component", "288.15:0.5"});
  add("blend_obscured", "/v1/blend", {{"animal_k", 293.15}, {"obscurer_k", 278.15}, {"cover_frac", 0.75}},
      {"blend", "--animal-k", "293.15", "--obscurer-k", "278.15", "--cover", "0.75"});
  add("blend_bad_area", "/v1/blend",
      {{"components", {{{"t_k", 293.15}, {"area_frac", 0.7}}, {{"t_k", 288.15}, {"area_frac", 0.5}}}}},
      {"blend", "--component", "293.15:0.7", "--component", "288.15:0.5"}, 400);
  add("spot_curve", "/v1/blend/spot-curve",
      {{"t_obj_k", 303.15}, {"t_bg_k", 293.15}, {"diameters_px", {5.0, 10.0, 20.0}}, {"supersample_count", 32},
       {"placements_count", 2}},
      {"spot-curve", "--t-obj-k", "303.15", "--t-bg-k", "293.15", "--diameter-px", "5", "--diameter-px", "10",
       "--diameter-px", "20", "--supersample", "32", "--placements", "2"});
  add("spot_curve_min", "/v1/blend/spot-curve",
      {{"t_obj_k", 303.15}, {"t_bg_k", 293.15}, {"diameters_px", json::array()}, {"supersample_count", 16},
       {"placements_count", 2}, {"max_relative_error_frac", 0.2}},
      {"spot-curve", "--t-obj-k", "303.15", "--t-bg-k", "293.15", "--supersample", "16", "--placements", "2",
       "--max-error", "0.2"});
  add("climatology_curve", "/v1/climatology/curve",
      {{"climatology", {{"preset", "loxton_like"}}}, {"date_doy", 268}, {"step_min", 60.0}},
      {"climatology", "--climatology", "loxton_like", "--doy", "268"});
  add("climatology_file", "/v1/climatology/curve",
      {{"climatology", {{"file", "climatology/loxton_like.csv"}}}, {"date_doy", 1}, {"step_min", 180.0}},
      {"climatology", "--climatology", "climatology/loxton_like.csv", "--doy", "1", "--step-min", "180"});
  add("climatology_season", "/v1/climatology/season",
      {{"climatology", {{"preset", "loxton_like"}}}, {"animal_k", 293.15}},
      {"climatology", "--climatology", "loxton_like", "--season-animal-k", "293.15"});
  add("climatology_unknown", "/v1/climatology/curve",
      {{"climatology", {{"preset", "atlantis"}}}, {"date_doy", 1}, {"step_min", 60.0}},
      {"climatology", "--climatology", "atlantis", "--doy", "1"}, 404);
  add("windows", "/v1/climatology/windows",
      {{"climatology", {{"preset", "loxton_like"}}}, {"date_doy", 268}, {"animal_k", 293.15}, {"min_contrast_k", 0.0},
       {"longitude_deg", 22.354109}, {"utc_offset_h", 2.0}},
      {"windows", "--climatology", "loxton_like", "--doy", "268", "--animal-k", "293.15", "--longitude-deg",
       "22.354109", "--utc-offset-h", "2"});
  add("windows_solar_only", "/v1/climatology/windows",
      {{"climatology", {{"preset", "loxton_like"}}}, {"date_doy", 180}, {"animal_k", 300.0}, {"min_contrast_k", 2.0}},
      {"windows", "--climatology", "loxton_like", "--doy", "180", "--animal-k", "300", "--min-contrast-k", "2"});
  add("corrections_range", "/v1/corrections",
      {{"camera", tiny}, {"mount", {{"phi_deg", 30.0}, {"height_m", 100.0}}}, {"kind", "range_m"}, {"axis", "x"},
       {"delivery", "auto"}, {"format", "f32"}},
      {"corrections", "--camera", "cameras/tiny.cfg", "--height-m", "100", "--phi-deg", "30"});
  add("corrections_pixel_scale", "/v1/corrections",
      {{"camera", tiny}, {"mount", {{"phi_deg", 10.0}, {"height_m", 40.0}}}, {"kind", "pixel_scale_m"}, {"axis", "y"},
       {"delivery", "inline"}, {"format", "f32"}},
      {"corrections", "--camera", "cameras/tiny.cfg", "--height-m", "40", "--phi-deg", "10", "--kind",
       "pixel_scale_m", "--axis", "y", "--delivery", "inline"});
  add("corrections_temperature", "/v1/corrections",
      {{"camera", tiny}, {"mount", {{"phi_deg", 45.0}, {"height_m", 60.0}}}, {"kind", "t_obs_k"}, {"axis", "x"},
       {"delivery", "auto"}, {"format", "f32"}, {"source_k", 303.15}, {"medium_k", 283.15},
       {"spectrum", {{"preset", "gray"}}}},
      {"corrections", "--camera", "cameras/tiny.cfg", "--height-m", "60", "--phi-deg", "45", "--kind", "t_obs_k",
       "--source-k", "303.15", "--medium-k", "283.15", "--spectrum", "gray"});
  add("corrections_inline_too_big", "/v1/corrections",
      {{"camera", tau}, {"mount", {{"phi_deg", 0.0}, {"height_m", 50.0}}}, {"kind", "range_m"}, {"axis", "x"},
       {"delivery", "inline"}, {"format", "f32"}},
      {"corrections", "--height-m", "50", "--delivery", "inline"}, 400);
  add("plan", "/v1/plan", mission, {"plan", "--mission", mission_file.string()});
  return v;
}

/// Removes fields that legitimately differ between two otherwise identical
/// responses (fresh artifact ids).
inline nlohmann::json without_artifact_ids(nlohmann::json j) {
  if (j.contains("artifact")) {
    j["artifact"].erase("id");
    j["artifact"].erase("url");
  }
  return j;
}

}  // namespace testing
