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

// thermoscope command-line tool. Every subcommand builds a /v1 request and
// runs it through the C API, so results match the HTTP service exactly.
//
// Exit status: 0 success, 1 domain or data error, 2 usage error.

#include <cmath>
#include <functional>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "http_frontend.hpp"
#include "thermoscope/thermoscope.h"

namespace {

using Json = nlohmann::json;

struct Globals {
  std::string format = "text";
  bool celsius = false;
  std::string data_dir;
  std::string store_dir;
};

struct UsageError {
  std::string message;
};

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

class Client {
 public:
  explicit Client(const Globals& g, bool local) {
    const auto rc = ts_service_create(g.data_dir.empty() ? nullptr : g.data_dir.c_str(),
                                      g.store_dir.empty() ? nullptr : g.store_dir.c_str(), local ? 1 : 0, &service_);
    if (rc != TS_OK) throw std::runtime_error(std::string("cannot start service: ") + ts_last_error());
  }
  ~Client() { ts_service_free(service_); }
  Client(const Client&) = delete;
  Client& operator=(const Client&) = delete;

  ts_service* get() const { return service_; }

  int call(const std::string& method, const std::string& path, const Json& body, std::string& out) const {
    const std::string text = body.is_null() ? std::string() : body.dump();
    int32_t status = 0;
    char* response = nullptr;
    size_t length = 0;
    const auto rc = ts_service_handle(service_, method.c_str(), path.c_str(), text.data(), text.size(), &status,
                                      &response, &length, nullptr);
    if (rc != TS_OK) throw std::runtime_error(ts_last_error());
    out.assign(response, length);
    ts_string_free(response);
    return status;
  }

 private:
  ts_service* service_ = nullptr;
};

Json camera_ref(const std::string& value) {
  if (value.find('/') == std::string::npos && value.find('.') == std::string::npos) return {{"preset", value}};
  return {{"config_file", value}};
}

Json spectrum_ref(const std::string& value) {
  if (value == "gray" || value == "representative" || value == "saturated_water") return {{"preset", value}};
  return {{"table_file", value}};
}

Json climatology_ref(const std::string& value) {
  if (value.find('/') == std::string::npos && value.find('.') == std::string::npos) return {{"preset", value}};
  return {{"file", value}};
}

std::string clock_text(double h) {
  const int minutes = static_cast<int>(std::lround(h * 60.0));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02d:%02d", minutes / 60, minutes % 60);
  return buf;
}

class Presenter {
 public:
  explicit Presenter(const Globals& g) : g_(g) {}

  std::string temp(double k, const char* pattern = "%.2f") const {
    return fmt(pattern, g_.celsius ? k - 273.15 : k);
  }

 private:
  const Globals& g_;
};

// One subcommand: its request and its text rendering.
struct Command {
  CLI::App* app = nullptr;
  std::string method = "POST";
  std::string path;
  std::function<Json()> request;
  std::function<std::string()> route;  // overrides `path` when set
  std::function<std::string(const Json&, const Presenter&)> render;
};

int fail(const char* what) {
  std::cerr << "error: " << what << ": " << ts_last_error() << "\n";
  return 1;
}

int write_spectrum(const std::string& lines, std::optional<double> gray_kappa, double air_k, double pressure_kpa,
                   double rh_pct, double step_cm1, std::optional<double> resample_cm1, const std::string& path) {
  ts_spectrum* spectrum = nullptr;
  const auto rc = gray_kappa ? ts_spectrum_gray(*gray_kappa, step_cm1, &spectrum)
                             : ts_spectrum_from_lines(lines.c_str(), air_k, pressure_kpa, rh_pct, step_cm1, &spectrum);
  if (rc != TS_OK) return fail("cannot build spectrum");
  if (resample_cm1) {
    ts_spectrum* coarse = nullptr;
    const auto rs = ts_spectrum_resample(spectrum, *resample_cm1, &coarse);
    ts_spectrum_free(spectrum);
    if (rs != TS_OK) return fail("cannot resample spectrum");
    spectrum = coarse;
  }
  const auto wr = ts_spectrum_write_table(spectrum, path.c_str());
  const auto n = ts_spectrum_size(spectrum);
  ts_spectrum_free(spectrum);
  if (wr != TS_OK) return fail("cannot write spectrum");
  std::cout << path << " " << n << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal-infrared drone survey planning"};
  app.set_version_flag("--version", std::string(ts_version()));
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--celsius", g.celsius, "Show temperatures in degrees Celsius (text output)");
  app.add_option("--data-dir", g.data_dir, "Bundled data directory");
  app.add_option("--store-dir", g.store_dir, "Plan and artifact store");

  std::vector<Command> commands;
  auto add = [&](const char* name, const char* help, std::string path) -> Command& {
    Command c;
    c.app = app.add_subcommand(name, help);
    c.path = std::move(path);
    commands.push_back(std::move(c));
    return commands.back();
  };
  commands.reserve(16);

  // height
  struct {
    std::string camera = "tau640";
    std::optional<double> target_m, pixel_scale_m, center_range_m;
    int min_px = 10;
    std::string axis = "x";
    double phi_deg = 0.0;
  } height;
  {
    auto& c = add("height", "Flight height for a target size, pixel scale or centre range", "/v1/geometry/height");
    c.app->add_option("--camera", height.camera, "Preset name or camera config file");
    auto* target = c.app->add_option("--target-m", height.target_m, "Target length, m");
    auto* scale = c.app->add_option("--pixel-scale-m", height.pixel_scale_m, "Ground metres per pixel");
    auto* range = c.app->add_option("--center-range-m", height.center_range_m, "Slant range to the view centre, m");
    target->excludes(scale)->excludes(range);
    scale->excludes(range);
    c.app->add_option("--min-px", height.min_px, "Pixels the target must span")->check(CLI::PositiveNumber);
    c.app->add_option("--axis", height.axis)->check(CLI::IsMember({"x", "y", "coarser"}));
    c.app->add_option("--phi-deg", height.phi_deg, "Mount angle from nadir (with --center-range-m)");
    c.request = [&] {
      if (!height.target_m && !height.pixel_scale_m && !height.center_range_m) {
        throw UsageError{"one of --target-m, --pixel-scale-m or --center-range-m is required"};
      }
      Json j = {{"camera", camera_ref(height.camera)}, {"axis", height.axis}};
      if (height.target_m) {
        j["target_m"] = *height.target_m;
        j["min_px"] = height.min_px;
      }
      if (height.pixel_scale_m) j["pixel_scale_m"] = *height.pixel_scale_m;
      if (height.center_range_m) {
        j["center_range_m"] = *height.center_range_m;
        j["phi_deg"] = height.phi_deg;
      }
      return j;
    };
    c.render = [](const Json& r, const Presenter&) { return fmt("%.1f", r.at("height_m").get<double>()) + "\n"; };
  }

  // footprint
  struct {
    std::string camera = "tau640";
    double height_m = 0.0;
    double phi_deg = 0.0;
    std::vector<double> rows;
  } footprint;
  {
    auto& c = add("footprint", "Ground footprint of the field of view", "/v1/geometry/footprint");
    c.app->add_option("--camera", footprint.camera, "Preset name or camera config file");
    c.app->add_option("--height-m", footprint.height_m, "Flight height, m")->required();
    c.app->add_option("--phi-deg", footprint.phi_deg, "Mount angle from nadir, deg");
    c.app->add_option("--row", footprint.rows, "Pixel row for range and pixel scale (repeatable)");
    c.request = [&] {
      Json j = {{"camera", camera_ref(footprint.camera)}, {"height_m", footprint.height_m}, {"phi_deg", footprint.phi_deg}};
      if (!footprint.rows.empty()) j["rows_px"] = footprint.rows;
      return j;
    };
    c.render = [](const Json& r, const Presenter&) {
      std::string out;
      if (r.contains("nadir")) {
        out += fmt("%.1f", r["nadir"]["x_m"].get<double>()) + " " + fmt("%.1f", r["nadir"]["y_m"].get<double>()) + "\n";
      } else {
        const auto& f = r.at("footprint");
        for (const char* k : {"d_c_m", "d_m_m", "d_f_m", "w_c_m", "w_m_m", "w_f_m", "r_c_m", "r_m_m", "r_f_m"}) {
          out += fmt("%.2f", f.at(k).get<double>()) + (std::string(k) == "r_f_m" ? "\n" : " ");
        }
      }
      if (r.contains("rows")) {
        for (const auto& row : r["rows"]) {
          out += fmt("%g", row["row_px"].get<double>()) + " " + fmt("%.3f", row["range_m"].get<double>()) + " " +
                 fmt("%.4f", row["pixel_scale_x_m"].get<double>()) + " " +
                 fmt("%.4f", row["pixel_scale_y_m"].get<double>()) + "\n";
        }
      }
      return out;
    };
  }

  // atmosphere
  struct {
    std::string spectrum = "representative";
    std::string lines;
    std::optional<double> gray_kappa;
    double air_k = 288.15, pressure_kpa = 101.325, rh_pct = 50.0, step_cm1 = 0.01;
    std::optional<double> resample_cm1;
    std::optional<double> source_k, medium_k;
    std::vector<double> distances;
    std::string write_spectrum;
  } atmo;
  {
    auto& c = add("atmosphere", "Observed temperature through the atmosphere, or build a spectrum table",
                  "/v1/atmosphere/transmission");
    c.app->add_option("--spectrum", atmo.spectrum, "Preset (gray, representative, saturated_water) or table file");
    c.app->add_option("--lines", atmo.lines, "Fixed-width line list for a line-by-line spectrum");
    c.app->add_option("--gray-kappa-per-m", atmo.gray_kappa, "Flat absorption coefficient, 1/m");
    c.app->add_option("--air-k", atmo.air_k, "Air temperature for --lines, K");
    c.app->add_option("--pressure-kpa", atmo.pressure_kpa, "Pressure for --lines, kPa");
    c.app->add_option("--rh-pct", atmo.rh_pct, "Relative humidity for --lines, %");
    c.app->add_option("--step-cm1", atmo.step_cm1, "Line-by-line grid step, cm^-1");
    c.app->add_option("--resample-cm1", atmo.resample_cm1, "Bin-average the spectrum to this step, cm^-1");
    c.app->add_option("--source-k", atmo.source_k, "Source temperature, K");
    c.app->add_option("--medium-k", atmo.medium_k, "Air temperature along the path, K");
    c.app->add_option("--distance-m", atmo.distances, "Path length (repeatable)");
    c.app->add_option("--write-spectrum", atmo.write_spectrum, "Write the spectrum table to this file and exit");
    c.request = [&] {
      Json spectrum;
      if (!atmo.lines.empty()) {
        spectrum = {{"lines_file", atmo.lines},
                    {"conditions", {{"air_k", atmo.air_k}, {"pressure_kpa", atmo.pressure_kpa}, {"rh_pct", atmo.rh_pct}}},
                    {"step_cm1", atmo.step_cm1}};
        if (atmo.resample_cm1) spectrum["resample_cm1"] = *atmo.resample_cm1;
      } else if (atmo.gray_kappa) {
        spectrum = {{"gray_kappa_per_m", *atmo.gray_kappa}};
      } else {
        spectrum = spectrum_ref(atmo.spectrum);
      }
      if (!atmo.source_k || !atmo.medium_k || atmo.distances.empty()) {
        throw UsageError{"--source-k, --medium-k and at least one --distance-m are required"};
      }
      return Json{{"spectrum", spectrum}, {"source_k", *atmo.source_k}, {"medium_k", *atmo.medium_k},
                  {"distances_m", atmo.distances}};
    };
    c.render = [](const Json& r, const Presenter& p) {
      std::string out;
      for (const auto& pt : r.at("points")) {
        out += fmt("%g", pt["distance_m"].get<double>()) + " " + fmt("%.6f", pt["transmission_frac"].get<double>()) +
               " " + p.temp(pt["t_obs_k"].get<double>(), "%.4f") + "\n";
      }
      return out;
    };
  }

  // fog
  struct {
    std::optional<double> diameter_m, density_per_m3, wavelength_m;
    std::vector<double> distances;
    std::optional<double> source_k;
    double depth_m = 0.0;
    std::optional<double> air_k;
    std::string spectrum = "saturated_water";
  } fog;
  {
    auto& c = add("fog", "Fog scattering transmission, or temperature change through a fog layer", "/v1/fog/transmission");
    c.app->add_option("--droplet-diameter-m", fog.diameter_m, "Droplet diameter, m");
    c.app->add_option("--number-density-per-m3", fog.density_per_m3, "Droplets per cubic metre");
    c.app->add_option("--wavelength-m", fog.wavelength_m, "Wavelength, m");
    c.app->add_option("--distance-m", fog.distances, "Path length (repeatable)");
    c.app->add_option("--source-k", fog.source_k, "Source temperature; switches to temperature-change mode");
    c.app->add_option("--depth-m", fog.depth_m, "Fog depth, m");
    c.app->add_option("--air-k", fog.air_k, "Air temperature in the fog, K");
    c.app->add_option("--spectrum", fog.spectrum, "Water-vapour spectrum preset or table file");
    c.request = [&] {
      Json f = Json::object();
      if (fog.diameter_m) f["droplet_diameter_m"] = *fog.diameter_m;
      if (fog.density_per_m3) f["number_density_per_m3"] = *fog.density_per_m3;
      if (fog.source_k) {
        f["depth_m"] = fog.depth_m;
        if (fog.air_k) f["air_k"] = *fog.air_k;
        return Json{{"source_k", *fog.source_k}, {"fog", f}, {"spectrum", spectrum_ref(fog.spectrum)}};
      }
      Json j = f;
      if (fog.wavelength_m) j["wavelength_m"] = *fog.wavelength_m;
      if (!fog.distances.empty()) j["distances_m"] = fog.distances;
      return j;
    };
    c.route = [&] { return std::string(fog.source_k ? "/v1/fog/delta" : "/v1/fog/transmission"); };
    c.render = [](const Json& r, const Presenter& p) {
      if (r.contains("total_k")) {
        return fmt("%.4f", r["absorption_emission_k"].get<double>()) + " " + fmt("%.4f", r["scattering_k"].get<double>()) +
               " " + fmt("%.4f", r["total_k"].get<double>()) + " " + p.temp(r["t_obs_k"].get<double>(), "%.4f") + "\n";
      }
      std::string out = fmt("%.6g", r.at("cross_section_m2").get<double>()) + " " +
                        fmt("%.6g", r.at("half_distance_m").get<double>()) + "\n";
      for (const auto& pt : r.at("points")) {
        out += fmt("%g", pt["distance_m"].get<double>()) + " " + fmt("%.6f", pt["transmission_frac"].get<double>()) + "\n";
      }
      return out;
    };
  }

  // blend
  struct {
    std::vector<std::string> components;
    std::optional<double> animal_k, obscurer_k, cover;
  } blend;
  {
    auto& c = add("blend", "Area-weighted pixel temperature", "/v1/blend");
    c.app->add_option("--component", blend.components, "TEMP_K:AREA_FRACTION (repeatable)");
    c.app->add_option("--animal-k", blend.animal_k, "Animal temperature, K");
    c.app->add_option("--obscurer-k", blend.obscurer_k, "Cover temperature, K");
    c.app->add_option("--cover", blend.cover, "Fraction of the animal hidden by cover");
    c.request = [&] {
      if (!blend.components.empty()) {
        Json list = Json::array();
        for (const auto& text : blend.components) {
          const auto colon = text.find(':');
          if (colon == std::string::npos) throw UsageError{"--component expects TEMP_K:AREA_FRACTION"};
          try {
            std::size_t used_t = 0;
            std::size_t used_a = 0;
            const double t = std::stod(text.substr(0, colon), &used_t);
            const double a = std::stod(text.substr(colon + 1), &used_a);
            if (used_t != colon || used_a != text.size() - colon - 1) throw std::invalid_argument(text);
            list.push_back({{"t_k", t}, {"area_frac", a}});
          } catch (const std::logic_error&) {
            throw UsageError{"--component expects TEMP_K:AREA_FRACTION, got '" + text + "'"};
          }
        }
        return Json{{"components", list}};
      }
      if (!blend.animal_k || !blend.obscurer_k || !blend.cover) {
        throw UsageError{"give --component entries, or --animal-k, --obscurer-k and --cover"};
      }
      return Json{{"animal_k", *blend.animal_k}, {"obscurer_k", *blend.obscurer_k}, {"cover_frac", *blend.cover}};
    };
    c.render = [](const Json& r, const Presenter& p) { return p.temp(r.at("t_obs_k").get<double>()) + "\n"; };
  }

  // spot-curve
  struct {
    double t_obj_k = 0.0, t_bg_k = 0.0;
    std::vector<double> diameters;
    int supersample = 64, placements = 8;
    std::optional<double> max_error;
  } spot;
  {
    auto& c = add("spot-curve", "Mean recorded temperature of a disc against its pixel diameter", "/v1/blend/spot-curve");
    c.app->add_option("--t-obj-k", spot.t_obj_k, "Object temperature, K")->required();
    c.app->add_option("--t-bg-k", spot.t_bg_k, "Background temperature, K")->required();
    c.app->add_option("--diameter-px", spot.diameters, "Disc diameter in pixels (repeatable)");
    c.app->add_option("--supersample", spot.supersample, "Samples per pixel side")->check(CLI::Range(1, 4096));
    c.app->add_option("--placements", spot.placements, "Sub-pixel placements per side")->check(CLI::Range(1, 64));
    c.app->add_option("--max-error", spot.max_error, "Also report the smallest diameter within this relative error");
    c.request = [&] {
      if (spot.diameters.empty() && !spot.max_error) throw UsageError{"give --diameter-px or --max-error"};
      Json j = {{"t_obj_k", spot.t_obj_k}, {"t_bg_k", spot.t_bg_k}, {"diameters_px", spot.diameters},
                {"supersample_count", spot.supersample}, {"placements_count", spot.placements}};
      if (spot.max_error) j["max_relative_error_frac"] = *spot.max_error;
      return j;
    };
    c.render = [](const Json& r, const Presenter& p) {
      std::string out;
      for (const auto& pt : r.at("points")) {
        out += fmt("%g", pt["diameter_px"].get<double>()) + " " + p.temp(pt["mean_recorded_k"].get<double>(), "%.4f") +
               " " + fmt("%.6f", pt["relative_error_frac"].get<double>()) + "\n";
      }
      if (r.contains("min_resolvable_px")) out += "min_resolvable_px " + std::to_string(r["min_resolvable_px"].get<int>()) + "\n";
      return out;
    };
  }

  // climatology
  struct {
    std::string source;
    int doy = 0;
    double step_min = 60.0;
    std::optional<double> season_animal_k;
  } clim;
  {
    auto& c = add("climatology", "Diurnal land-surface-temperature curve, or the coolest seasons", "/v1/climatology/curve");
    c.app->add_option("--climatology", clim.source, "Climatology preset or CSV file")->required();
    c.app->add_option("--doy", clim.doy, "Day of year");
    c.app->add_option("--step-min", clim.step_min, "Output spacing, minutes");
    c.app->add_option("--season-animal-k", clim.season_animal_k, "Rank the coolest seasons for this animal temperature");
    c.request = [&] {
      if (clim.season_animal_k) return Json{{"climatology", climatology_ref(clim.source)}, {"animal_k", *clim.season_animal_k}};
      if (clim.doy == 0) throw UsageError{"--doy or --season-animal-k is required"};
      return Json{{"climatology", climatology_ref(clim.source)}, {"date_doy", clim.doy}, {"step_min", clim.step_min}};
    };
    c.route = [&] { return std::string(clim.season_animal_k ? "/v1/climatology/season" : "/v1/climatology/curve"); };
    c.render = [](const Json& r, const Presenter& p) {
      std::string out;
      if (r.contains("ranges")) {
        for (const auto& s : r["ranges"]) {
          out += std::to_string(s["start_doy"].get<int>()) + " " + std::to_string(s["end_doy"].get<int>()) + " " +
                 p.temp(s["mean_daily_min_k"].get<double>()) + " " + fmt("%.2f", s["best_contrast_k"].get<double>()) + "\n";
        }
        return out;
      }
      for (const auto& pt : r.at("points")) {
        out += fmt("%.2f", pt["solar_h"].get<double>()) + " " + p.temp(pt["mean_k"].get<double>()) + " " +
               fmt("%.2f", pt["two_sigma_k"].get<double>()) + " " + p.temp(pt["upper_k"].get<double>()) + "\n";
      }
      return out;
    };
  }

  // windows
  struct {
    std::string source;
    int doy = 0;
    double animal_k = 0.0, min_contrast_k = 0.0;
    std::optional<double> longitude_deg;
    double utc_offset_h = 0.0;
  } win;
  {
    auto& c = add("windows", "Times of day with enough thermal contrast", "/v1/climatology/windows");
    c.app->add_option("--climatology", win.source, "Climatology preset or CSV file")->required();
    c.app->add_option("--doy", win.doy, "Day of year")->required();
    c.app->add_option("--animal-k", win.animal_k, "Coolest animal surface temperature, K")->required();
    c.app->add_option("--min-contrast-k", win.min_contrast_k, "Required contrast, K");
    c.app->add_option("--longitude-deg", win.longitude_deg, "Site longitude, for clock times");
    c.app->add_option("--utc-offset-h", win.utc_offset_h, "Time zone offset, h");
    c.request = [&] {
      Json j = {{"climatology", climatology_ref(win.source)}, {"date_doy", win.doy}, {"animal_k", win.animal_k},
                {"min_contrast_k", win.min_contrast_k}};
      if (win.longitude_deg) {
        j["longitude_deg"] = *win.longitude_deg;
        j["utc_offset_h"] = win.utc_offset_h;
      }
      return j;
    };
    c.render = [](const Json& r, const Presenter&) {
      std::string out;
      const auto& solar = r.at("windows_solar");
      for (std::size_t i = 0; i < solar.size(); ++i) {
        out += clock_text(solar[i]["start_h"].get<double>()) + " " + clock_text(solar[i]["end_h"].get<double>());
        if (r.contains("windows_clock")) {
          const auto& w = r["windows_clock"][i];
          out += " " + clock_text(w["start_h"].get<double>()) + " " + clock_text(w["end_h"].get<double>());
        }
        out += " " + fmt("%.2f", solar[i]["worst_case_contrast_k"].get<double>()) + "\n";
      }
      return out;
    };
  }

  // corrections
  struct {
    std::string camera = "tau640";
    double height_m = 0.0, phi_deg = 0.0;
    std::string kind = "range_m", axis = "x", spectrum = "representative";
    std::optional<double> source_k, medium_k;
    std::string out, raster_format = "f32", delivery = "auto";
  } corr;
  {
    auto& c = add("corrections", "Per-pixel range, pixel scale or observed temperature grid", "/v1/corrections");
    c.app->add_option("--camera", corr.camera, "Preset name or camera config file");
    c.app->add_option("--height-m", corr.height_m, "Flight height, m")->required();
    c.app->add_option("--phi-deg", corr.phi_deg, "Mount angle from nadir, deg");
    c.app->add_option("--kind", corr.kind)->check(CLI::IsMember({"range_m", "pixel_scale_m", "t_obs_k"}));
    c.app->add_option("--axis", corr.axis)->check(CLI::IsMember({"x", "y"}));
    c.app->add_option("--spectrum", corr.spectrum, "Spectrum preset or table file (t_obs_k)");
    c.app->add_option("--source-k", corr.source_k, "Source temperature (t_obs_k)");
    c.app->add_option("--medium-k", corr.medium_k, "Air temperature (t_obs_k)");
    c.app->add_option("--out", corr.out, "Write the grid to this file");
    c.app->add_option("--raster-format", corr.raster_format)->check(CLI::IsMember({"f32", "csv"}));
    c.app->add_option("--delivery", corr.delivery)->check(CLI::IsMember({"auto", "inline", "artifact"}));
    c.request = [&] {
      Json j = {{"camera", camera_ref(corr.camera)},
                {"mount", {{"phi_deg", corr.phi_deg}, {"height_m", corr.height_m}}},
                {"kind", corr.kind},
                {"axis", corr.axis},
                {"delivery", corr.delivery},
                {"format", corr.raster_format}};
      if (corr.kind == "t_obs_k") {
        if (!corr.source_k || !corr.medium_k) throw UsageError{"t_obs_k grids need --source-k and --medium-k"};
        j["source_k"] = *corr.source_k;
        j["medium_k"] = *corr.medium_k;
        j["spectrum"] = spectrum_ref(corr.spectrum);
      }
      if (!corr.out.empty()) j["output_file"] = corr.out;
      return j;
    };
    c.render = [](const Json& r, const Presenter& p) {
      const bool temp = r.at("kind") == "t_obs_k";
      const char* u = temp ? "_k" : "_m";
      auto value = [&](double v) { return temp ? p.temp(v, "%.4f") : fmt("%.4f", v); };
      std::string out = r.at("kind").get<std::string>() + " " + std::to_string(r.at("width_px").get<int>()) + " " +
                        std::to_string(r.at("height_px").get<int>()) + " " +
                        value(r.at(std::string("min_value") + u).get<double>()) + " " +
                        value(r.at(std::string("max_value") + u).get<double>());
      if (r.contains("artifact")) {
        const auto& a = r["artifact"];
        out += " " + (a.contains("path") ? a["path"].get<std::string>() : a["url"].get<std::string>());
      }
      return out + "\n";
    };
  }

  // plan
  struct {
    std::string mission;
    bool save = false;
  } plan;
  {
    auto& c = add("plan", "Full mission plan from a mission file", "/v1/plan");
    c.app->add_option("--mission", plan.mission, "Mission JSON (spec, climatology, spectrum)")->required();
    c.app->add_flag("--save", plan.save, "Store the plan");
    c.request = [&] {
      std::ifstream in(plan.mission);
      if (!in) throw UsageError{"cannot read mission file " + plan.mission};
      std::stringstream ss;
      ss << in.rdbuf();
      auto j = Json::parse(ss.str(), nullptr, false);
      if (j.is_discarded() || !j.is_object()) throw UsageError{"mission file is not a JSON object"};
      if (plan.save) j["save"] = true;
      return j;
    };
    c.render = [](const Json& r, const Presenter&) {
      std::string out = r.at("report_text").get<std::string>();
      if (r.contains("id")) out += "saved as " + r["id"].get<std::string>() + "\n";
      return out;
    };
  }

  // serve
  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port (0 picks a free port)")->check(CLI::Range(0, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (serve->parsed()) {
      Client client(g, false);
      thermoscope::http::Server server(client.get());
      const int bound = server.bind(host, port);
      if (bound < 0) {
        std::cerr << "error: cannot bind " << host << ":" << port << "\n";
        return 1;
      }
      std::cerr << "listening on http://" << host << ":" << bound << "\n";
      return server.listen() ? 0 : 1;
    }
    if (commands[2].app->parsed() && !atmo.write_spectrum.empty()) {
      if (atmo.lines.empty() && !atmo.gray_kappa) {
        std::cerr << "error: --write-spectrum needs --lines or --gray-kappa-per-m\n";
        return 2;
      }
      return write_spectrum(atmo.lines, atmo.gray_kappa, atmo.air_k, atmo.pressure_kpa, atmo.rh_pct, atmo.step_cm1,
                            atmo.resample_cm1, atmo.write_spectrum);
    }
    for (auto& c : commands) {
      if (!c.app->parsed()) continue;
      Json request;
      try {
        request = c.request();
      } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n\n" << c.app->help();
        return 2;
      }
      Client client(g, true);
      std::string body;
      const int status = client.call(c.method, c.route ? c.route() : c.path, request, body);
      if (status != 200) {
        if (g.format == "json") {
          std::cout << body << "\n";
        } else {
          const auto err = Json::parse(body, nullptr, false);
          if (!err.is_discarded() && err.contains("error")) {
            std::cerr << "error: " << err["error"].value("code", "") << ": " << err["error"].value("message", "") << "\n";
          } else {
            std::cerr << "error: HTTP " << status << "\n";
          }
        }
        return 1;
      }
      if (g.format == "json") {
        std::cout << body << "\n";
      } else {
        std::cout << c.render(Json::parse(body), Presenter(g));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
