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

#include "service.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "camera_geometry.hpp"
#include "corrections.hpp"
#include "error.hpp"
#include "fog.hpp"
#include "planner.hpp"
#include "radiative_transfer.hpp"
#include "scene_blending.hpp"
#include "wire.hpp"

#ifndef THERMOSCOPE_DATA_DIR
#define THERMOSCOPE_DATA_DIR "data"
#endif

namespace thermoscope {

using wire::integer_or;
using wire::member;
using wire::number;
using wire::number_or;
using wire::string_or;
using Json = nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::bad_request, message); }

int status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_found: return 404;
    case ErrorCode::io: return 500;
    default: return 400;
  }
}

std::vector<double> numbers(const Json& obj, std::string_view key) {
  const auto& v = member(obj, key);
  if (!v.is_array()) bad("field '" + std::string(key) + "' must be an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) bad("field '" + std::string(key) + "' must be an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

Axis axis_from(const Json& body) {
  const auto name = string_or(body, "axis", "x");
  if (name == "x") return Axis::x;
  if (name == "y") return Axis::y;
  if (name == "coarser") return Axis::coarser;
  bad("axis must be x, y or coarser");
}

CameraModel camera_of(const Json& body, const wire::PathResolver& resolve) {
  return body.contains("camera") ? wire::camera_from_json(body.at("camera"), resolve) : tau640_camera();
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* unit_suffix(GridKind kind) { return kind == GridKind::t_obs_k ? "_k" : "_m"; }

}  // namespace

ServiceConfig default_service_config() {
  ServiceConfig c;
  const char* data = std::getenv("THERMOSCOPE_DATA");
  c.data_dir = data != nullptr && *data != '\0' ? data : THERMOSCOPE_DATA_DIR;
  const char* store = std::getenv("THERMOSCOPE_STORE");
  c.store_dir = store != nullptr && *store != '\0' ? store : "thermoscope-store";
  return c;
}

Service::Service(ServiceConfig config) : config_(std::move(config)), store_(config_.store_dir) {}

Response Service::handle(std::string_view method, std::string_view path, std::string_view body) {
  Response response;
  try {
    const auto request = wire::parse_body(body);
    const auto result = route(method, path, request, response);
    if (!result.is_null()) response.body = result.dump();
  } catch (const Error& e) {
    response.status = status_for(e.code());
    response.content_type = "application/json";
    response.body = wire::error_body(error_code_name(e.code()), e.what()).dump();
  } catch (const Json::exception& e) {
    response.status = 400;
    response.content_type = "application/json";
    response.body = wire::error_body("bad_request", e.what()).dump();
  } catch (const std::exception& e) {
    response.status = 500;
    response.content_type = "application/json";
    response.body = wire::error_body("internal", e.what()).dump();
  }
  return response;
}

Json Service::route(std::string_view method, std::string_view path, const Json& body, Response& raw) {
  auto not_found = [&] {
    throw Error(ErrorCode::not_found, "no route for " + std::string(method) + " " + std::string(path));
  };
  auto post = [&](std::string_view route) { return path == route && method == "POST"; };

  if (path == "/v1/health" && method == "GET") return health();
  if (post("/v1/geometry/height")) return geometry_height(body);
  if (post("/v1/geometry/footprint")) return geometry_footprint(body);
  if (post("/v1/atmosphere/transmission")) return atmosphere_transmission(body);
  if (post("/v1/atmosphere/path")) return atmosphere_path(body);
  if (post("/v1/fog/transmission")) return fog_transmission(body);
  if (post("/v1/fog/delta")) return fog_delta(body);
  if (post("/v1/blend")) return blend(body);
  if (post("/v1/blend/scene")) return blend_scene(body);
  if (post("/v1/blend/spot-curve")) return spot_curve(body);
  if (post("/v1/climatology/curve")) return climatology_curve(body);
  if (post("/v1/climatology/season")) return climatology_season(body);
  if (post("/v1/climatology/windows")) return climatology_windows(body);
  if (post("/v1/corrections")) return corrections(body);
  if (post("/v1/plan")) return plan(body);

  if (path == "/v1/plans" && method == "GET") {
    Json list = Json::array();
    for (const auto& s : store_.list()) list.push_back({{"id", s.id}, {"created_at", s.created_at}});
    return {{"plans", list}};
  }
  constexpr std::string_view plans_prefix = "/v1/plans/";
  if (path.starts_with(plans_prefix)) {
    const auto id = path.substr(plans_prefix.size());
    if (method == "GET") {
      const auto record = store_.get(id);
      if (!record) throw Error(ErrorCode::not_found, "no plan with id '" + std::string(id) + "'");
      return {{"id", record->id}, {"created_at", record->created_at}, {"spec", record->spec}, {"plan", record->plan}};
    }
    if (method == "DELETE") {
      if (!store_.remove(id)) throw Error(ErrorCode::not_found, "no plan with id '" + std::string(id) + "'");
      return {{"deleted", std::string(id)}};
    }
  }
  constexpr std::string_view artifacts_prefix = "/v1/artifacts/";
  if (path.starts_with(artifacts_prefix) && method == "GET") {
    const auto name = path.substr(artifacts_prefix.size());
    const auto dot = name.find('.');
    const auto ext = dot == std::string_view::npos ? std::string_view{} : name.substr(dot);
    if (!is_plan_id(name.substr(0, dot)) || (ext != ".tirc" && ext != ".csv")) {
      throw Error(ErrorCode::not_found, "no artifact '" + std::string(name) + "'");
    }
    const auto file = config_.store_dir / "artifacts" / std::string(name);
    if (!std::filesystem::exists(file)) throw Error(ErrorCode::not_found, "no artifact '" + std::string(name) + "'");
    raw.body = read_text(file);
    raw.content_type = ext == ".csv" ? "text/csv" : "application/octet-stream";
    return nullptr;
  }
  not_found();
  return nullptr;
}

std::filesystem::path Service::resolve(const std::string& name, std::string_view subdir) const {
  const std::filesystem::path p(name);
  if (name.empty()) bad("empty file reference");
  if (config_.allow_local_paths) {
    if (p.is_absolute() || std::filesystem::exists(p)) return p;
  } else if (p.is_absolute() || std::any_of(p.begin(), p.end(), [](const auto& part) { return part == ".."; })) {
    bad("file references must be relative to the data directory");
  }
  if (!subdir.empty() && !std::filesystem::exists(config_.data_dir / p)) {
    const auto nested = config_.data_dir / subdir / p;
    if (std::filesystem::exists(nested)) return nested;
  }
  return config_.data_dir / p;
}

std::shared_ptr<const AbsorptionSpectrum> Service::spectrum(const Json& ref, std::string_view fallback_preset) {
  Json spec = ref;
  if (spec.is_null()) spec = {{"preset", fallback_preset}};
  if (spec.is_string()) spec = {{"preset", spec.get<std::string>()}};
  if (!spec.is_object()) bad("spectrum must be a preset name or an object");

  std::string key = spec.dump();
  std::filesystem::path file;
  if (spec.contains("preset")) {
    const auto name = string_or(spec, "preset", "");
    if (name != "gray" && name != "representative" && name != "saturated_water") {
      throw Error(ErrorCode::not_found, "unknown spectrum preset '" + name + "'");
    }
    file = config_.data_dir / "spectra" / (name == "gray" ? "gray_1e-4.csv" : name + ".csv");
  } else if (spec.contains("table_file")) {
    file = resolve(string_or(spec, "table_file", ""), "spectra");
  } else if (spec.contains("lines_file")) {
    file = resolve(string_or(spec, "lines_file", ""), "lines");
  } else if (!spec.contains("gray_kappa_per_m")) {
    bad("spectrum needs preset, table_file, lines_file or gray_kappa_per_m");
  }
  if (!file.empty()) key += "|" + file.string();

  {
    std::lock_guard lock(cache_mutex_);
    if (const auto it = spectra_.find(key); it != spectra_.end()) return it->second;
  }
  std::shared_ptr<const AbsorptionSpectrum> result;
  if (spec.contains("gray_kappa_per_m")) {
    result = std::make_shared<AbsorptionSpectrum>(
        gray_spectrum(number(spec, "gray_kappa_per_m"), {714.0, 1250.0, number_or(spec, "step_cm1", 0.5)}));
  } else if (spec.contains("lines_file")) {
    const auto lines = load_line_list(file);
    const auto conditions = wire::conditions_from_json(spec.value("conditions", Json()));
    const WavenumberGrid grid{714.0, 1250.0, number_or(spec, "step_cm1", 0.01)};
    auto computed = absorption_spectrum(lines, conditions, grid, {number_or(spec, "wing_cutoff_cm1", 25.0)});
    if (spec.contains("resample_cm1")) computed = resample_mean(computed, number(spec, "resample_cm1"));
    result = std::make_shared<AbsorptionSpectrum>(std::move(computed));
  } else {
    result = std::make_shared<AbsorptionSpectrum>(load_spectrum_table(file));
  }
  std::lock_guard lock(cache_mutex_);
  return spectra_.emplace(key, result).first->second;
}

std::shared_ptr<const std::vector<LstRecord>> Service::climatology(const Json& ref) {
  if (ref.is_null()) bad("missing field 'climatology'");
  Json spec = ref.is_string() ? Json{{"preset", ref.get<std::string>()}} : ref;
  if (!spec.is_object()) bad("climatology must be a preset name or an object");
  if (spec.contains("csv")) {
    return std::make_shared<const std::vector<LstRecord>>(parse_climatology(string_or(spec, "csv", "")));
  }
  std::filesystem::path file;
  if (spec.contains("preset")) {
    const auto name = string_or(spec, "preset", "");
    if (name != "loxton_like") throw Error(ErrorCode::not_found, "unknown climatology preset '" + name + "'");
    file = config_.data_dir / "climatology" / (name + ".csv");
  } else if (spec.contains("file")) {
    file = resolve(string_or(spec, "file", ""), "climatology");
  } else {
    bad("climatology needs preset, file or csv");
  }
  const auto key = file.string();
  {
    std::lock_guard lock(cache_mutex_);
    if (const auto it = climatologies_.find(key); it != climatologies_.end()) return it->second;
  }
  auto records = std::make_shared<const std::vector<LstRecord>>(load_climatology(file));
  std::lock_guard lock(cache_mutex_);
  return climatologies_.emplace(key, records).first->second;
}

Json Service::health() const { return {{"status", "ok"}, {"service", "thermoscope"}, {"version", kVersion}}; }

Json Service::geometry_height(const Json& body) const {
  const auto camera = camera_of(body, [this](const std::string& n) { return resolve(n, "cameras"); });
  double h = 0.0;
  std::string mode;
  if (body.contains("center_range_m")) {
    h = height_for_center_range(camera, number_or(body, "phi_deg", 0.0), number(body, "center_range_m"));
    mode = "center_range";
  } else if (body.contains("pixel_scale_m")) {
    h = height_for_pixel_scale(camera, number(body, "pixel_scale_m"), axis_from(body));
    mode = "pixel_scale";
  } else {
    h = height_for_target(camera, number(body, "target_m"), integer_or(body, "min_px", 10), axis_from(body));
    mode = "target";
  }
  return {{"mode", mode},
          {"height_m", h},
          {"pixel_scale", wire::to_json(nadir_pixel_scale(camera, h), "_m")},
          {"footprint", wire::to_json(nadir_footprint(camera, h), "_m")}};
}

Json Service::geometry_footprint(const Json& body) const {
  const auto camera = camera_of(body, [this](const std::string& n) { return resolve(n, "cameras"); });
  const auto mount = wire::mount_from_json(body);
  Json out = {{"camera", wire::to_json(camera)}, {"mount", wire::to_json(mount)}};
  if (mount.phi_deg == 0.0) out["nadir"] = wire::to_json(nadir_footprint(camera, mount.height_m), "_m");
  out["footprint"] = wire::to_json(angled_footprint(camera, mount));
  if (body.contains("rows_px")) {
    Json rows = Json::array();
    for (const double row : numbers(body, "rows_px")) {
      const auto scale = pixel_scale_at(camera, mount, row);
      rows.push_back({{"row_px", row},
                      {"range_m", range_for_pixel_row(camera, mount, row)},
                      {"pixel_scale_x_m", scale.x},
                      {"pixel_scale_y_m", scale.y}});
    }
    out["rows"] = rows;
  }
  return out;
}

Json Service::atmosphere_transmission(const Json& body) {
  const auto s = spectrum(body.value("spectrum", Json()), "representative");
  const double source = number(body, "source_k");
  const double medium = number(body, "medium_k");
  const auto distances = numbers(body, "distances_m");
  require(std::is_sorted(distances.begin(), distances.end()), "distances must be sorted ascending");
  const BandTransmission transmission(*s, source, medium);
  Json points = Json::array();
  for (const double d : distances) {
    require(d >= 0.0, "distances must be non-negative");
    const double f = transmission(d);
    const double t = observed_temperature(source, f);
    points.push_back({{"distance_m", d}, {"transmission_frac", f}, {"t_obs_k", t}, {"delta_k", t - source}});
  }
  return {{"source_k", source}, {"medium_k", medium}, {"points", points}};
}

Json Service::atmosphere_path(const Json& body) {
  const double source = number(body, "source_k");
  const auto& segments = member(body, "segments");
  if (!segments.is_array()) bad("segments must be an array");
  std::vector<double> deltas;
  Json out = Json::array();
  for (const auto& seg : segments) {
    const auto kind = string_or(seg, "kind", "");
    double delta = 0.0;
    if (kind == "delta") {
      delta = number(seg, "delta_k");
    } else if (kind == "gas") {
      const PathSegment p{GasMedium{wire::conditions_from_json(seg.value("conditions", Json())),
                                    spectrum(seg.value("spectrum", Json()), "representative")},
                          number(seg, "length_m")};
      delta = segment_temperature_change(source, p);
    } else if (kind == "fog") {
      const PathSegment p{FogMedium{wire::fog_from_json(seg.value("fog", Json())),
                                    spectrum(seg.value("spectrum", Json()), "saturated_water")},
                          number(seg, "length_m")};
      delta = segment_temperature_change(source, p);
    } else {
      bad("segment kind must be gas, fog or delta");
    }
    deltas.push_back(delta);
    out.push_back({{"kind", kind}, {"delta_k", delta}});
  }
  return {{"source_k", source}, {"segments", out}, {"t_obs_k", compose_temperature_changes(source, deltas)}};
}

Json Service::fog_transmission(const Json& body) const {
  const double d = number_or(body, "droplet_diameter_m", FogConditions{}.droplet_diameter_m);
  const double n = number_or(body, "number_density_per_m3", FogConditions{}.number_density_per_m3);
  const double wavelength = number_or(body, "wavelength_m", 10e-6);
  require(n > 0.0, "number density must be positive");
  const double index = body.contains("refractive_index_frac") ? number(body, "refractive_index_frac")
                                                              : RefractiveIndexTable::water().at(wavelength);
  const double sigma = fog_cross_section(d, wavelength, index);
  Json points = Json::array();
  if (body.contains("distances_m")) {
    for (const double s : numbers(body, "distances_m")) {
      points.push_back({{"distance_m", s}, {"transmission_frac", thermoscope::fog_transmission(n, sigma, s)}});
    }
  }
  return {{"wavelength_m", wavelength},
          {"refractive_index_frac", index},
          {"cross_section_m2", sigma},
          {"half_distance_m", fog_half_distance(n, sigma)},
          {"points", points}};
}

Json Service::fog_delta(const Json& body) {
  const double source = number(body, "source_k");
  const auto fog = wire::fog_from_json(body.value("fog", Json()));
  const auto s = spectrum(body.value("spectrum", Json()), "saturated_water");
  const auto change = fog_temperature_change(source, fog, *s);
  return {{"source_k", source},
          {"fog", wire::to_json(fog)},
          {"absorption_emission_k", change.absorption_emission_k},
          {"scattering_k", change.scattering_k},
          {"total_k", change.total_k},
          {"t_obs_k", source + change.total_k}};
}

Json Service::blend(const Json& body) const {
  if (body.contains("components")) {
    const auto& list = member(body, "components");
    if (!list.is_array()) bad("components must be an array");
    std::vector<SceneComponent> parts;
    for (const auto& c : list) {
      const double a = c.contains("area_frac") ? number(c, "area_frac") : number(c, "a");
      parts.push_back({number(c, "t_k"), a});
    }
    return {{"t_obs_k", blend_temperature(parts)}};
  }
  return {{"t_obs_k", obscured_temperature(number(body, "animal_k"), number(body, "obscurer_k"),
                                           number(body, "cover_frac"))}};
}

Json Service::blend_scene(const Json& body) const {
  SyntheticScene scene;
  scene.width = integer_or(body, "width_px", 1);
  scene.height = integer_or(body, "height_px", 1);
  scene.background_k = number(body, "background_k");
  require(scene.width <= config_.inline_grid_limit && scene.height <= config_.inline_grid_limit,
          "scene grids are limited to " + std::to_string(config_.inline_grid_limit) + " px per side");
  if (body.contains("discs")) {
    for (const auto& d : member(body, "discs")) {
      scene.discs.push_back({number(d, "centre_x_px"), number(d, "centre_y_px"), number(d, "diameter_px"), number(d, "t_k")});
    }
  }
  const auto raster = render_scene(scene, integer_or(body, "supersample_count", 64));
  return {{"width_px", raster.width}, {"height_px", raster.height}, {"values_k", raster.values}};
}

Json Service::spot_curve(const Json& body) const {
  SpotCurveOptions options;
  options.supersample = integer_or(body, "supersample_count", options.supersample);
  options.placements = integer_or(body, "placements_count", options.placements);
  options.coverage_threshold = number_or(body, "coverage_threshold_frac", options.coverage_threshold);
  require(options.supersample <= 4096 && options.placements <= 64, "supersample <= 4096 and placements <= 64");
  const double t_obj = number(body, "t_obj_k");
  const double t_bg = number(body, "t_bg_k");
  const auto diameters = body.contains("diameters_px") ? numbers(body, "diameters_px") : std::vector<double>{};
  require(diameters.size() <= 1000, "at most 1000 diameters per request");
  for (const double d : diameters) require(d <= 1000.0, "diameters are limited to 1000 px");
  Json points = Json::array();
  for (const auto& p : spot_size_curve(t_obj, t_bg, diameters, options)) {
    points.push_back(
        {{"diameter_px", p.diameter_px}, {"mean_recorded_k", p.mean_recorded_k}, {"relative_error_frac", p.relative_error}});
  }
  Json out = {{"t_obj_k", t_obj}, {"t_bg_k", t_bg}, {"points", points}};
  if (body.contains("max_relative_error_frac")) {
    out["min_resolvable_px"] = min_resolvable_diameter(t_obj, t_bg, number(body, "max_relative_error_frac"), options);
  }
  return out;
}

Json Service::climatology_curve(const Json& body) {
  const auto records = climatology(body.value("climatology", Json()));
  const auto curve = diurnal_curve(*records, wire::integer(body, "date_doy"));
  const double step = number_or(body, "step_min", 60.0);
  require(step >= 1.0 && step <= 24.0 * 60.0, "step must lie in [1, 1440] minutes");
  Json knots = Json::array();
  for (const auto& k : curve.knots()) {
    knots.push_back({{"solar_h", k.solar_h}, {"mean_k", k.mean_k}, {"two_sigma_k", k.two_sigma_k}});
  }
  Json points = Json::array();
  for (double m = 0.0; m <= kMinutesPerDay + 1e-9; m += step) {
    const double h = m / 60.0;
    points.push_back({{"solar_h", h}, {"mean_k", curve.mean(h)}, {"two_sigma_k", curve.two_sigma(h)}, {"upper_k", curve.upper(h)}});
  }
  return {{"date_doy", curve.day_of_year()}, {"knots", knots}, {"points", points}};
}

Json Service::climatology_season(const Json& body) {
  const auto records = climatology(body.value("climatology", Json()));
  Json ranges = Json::array();
  for (const auto& r : best_season(*records, number(body, "animal_k"))) ranges.push_back(wire::to_json(r));
  return {{"ranges", ranges}};
}

Json Service::climatology_windows(const Json& body) {
  const auto records = climatology(body.value("climatology", Json()));
  const int doy = wire::integer(body, "date_doy");
  const auto curve = diurnal_curve(*records, doy);
  const auto windows = contrast_windows(curve, number(body, "animal_k"), number_or(body, "min_contrast_k", 0.0));
  Json solar = Json::array();
  for (const auto& w : windows) solar.push_back(wire::to_json(w));
  Json out = {{"date_doy", doy}, {"windows_solar", solar}};
  if (body.contains("longitude_deg")) {
    const double offset = solar_time_offset_min(number(body, "longitude_deg"), number_or(body, "utc_offset_h", 0.0), doy);
    Json clock = Json::array();
    for (auto w : windows) {
      w.start_h -= offset / 60.0;
      w.end_h -= offset / 60.0;
      if (w.start_h < 0.0) {
        w.start_h += 24.0;
        w.end_h += 24.0;
      }
      clock.push_back(wire::to_json(w));
    }
    out["solar_offset_min"] = offset;
    out["windows_clock"] = clock;
  }
  return out;
}

Json Service::corrections(const Json& body) {
  const auto camera = camera_of(body, [this](const std::string& n) { return resolve(n, "cameras"); });
  const auto mount = wire::mount_from_json(member(body, "mount"));
  const auto kind = parse_grid_kind(string_or(body, "kind", "range_m"));
  CorrectionGrid grid;
  switch (kind) {
    case GridKind::range_m: grid = range_grid(camera, mount); break;
    case GridKind::pixel_scale_m: grid = pixel_scale_grid(camera, mount, axis_from(body)); break;
    case GridKind::t_obs_k: {
      const auto s = spectrum(body.value("spectrum", Json()), "representative");
      grid = temperature_grid(camera, mount, number(body, "source_k"), number(body, "medium_k"), *s);
      break;
    }
  }
  const std::string u = unit_suffix(kind);
  const auto [lo, hi] = std::minmax_element(grid.values.begin(), grid.values.end());
  Json out = {{"kind", grid_kind_name(kind)},
              {"width_px", grid.width},
              {"height_px", grid.height},
              {"camera", wire::to_json(camera)},
              {"mount", wire::to_json(mount)},
              {"min_value" + u, *lo},
              {"max_value" + u, *hi}};

  const auto delivery = string_or(body, "delivery", "auto");
  if (delivery != "auto" && delivery != "inline" && delivery != "artifact") bad("delivery must be auto, inline or artifact");
  const bool small = grid.width <= config_.inline_grid_limit && grid.height <= config_.inline_grid_limit;
  const bool has_output = body.contains("output_file");
  if (delivery == "inline" && !small) {
    throw Error(ErrorCode::use_artifact, "grids larger than " + std::to_string(config_.inline_grid_limit) + "x" +
                                             std::to_string(config_.inline_grid_limit) +
                                             " are returned as stored artifacts");
  }
  if ((delivery == "inline" || (delivery == "auto" && small)) && !has_output) {
    out["values" + u] = grid.values;
    return out;
  }

  const auto format_name = string_or(body, "format", "f32");
  if (format_name != "f32" && format_name != "csv") bad("format must be f32 or csv");
  const auto format = format_name == "csv" ? RasterFormat::csv : RasterFormat::f32;
  std::ostringstream bytes;
  if (format == RasterFormat::csv) {
    write_grid_csv(bytes, grid);
  } else {
    write_grid_f32(bytes, grid);
  }
  Json artifact = {{"format", format_name}, {"size_bytes", bytes.str().size()}};
  if (has_output) {
    if (!config_.allow_local_paths) bad("output_file is only accepted from local callers");
    const std::filesystem::path target = string_or(body, "output_file", "");
    write_file_atomic(target, bytes.str());
    artifact["path"] = target.string();
  } else {
    const auto dir = config_.store_dir / "artifacts";
    std::filesystem::create_directories(dir);
    const auto name = random_token() + (format == RasterFormat::csv ? ".csv" : ".tirc");
    write_file_atomic(dir / name, bytes.str());
    artifact["id"] = name;
    artifact["url"] = "/v1/artifacts/" + name;
  }
  out["artifact"] = artifact;
  return out;
}

Json Service::plan(const Json& body) {
  const auto resolver = [this](const std::string& n) { return resolve(n, "cameras"); };
  const auto spec = wire::spec_from_json(member(body, "spec"), resolver);
  const auto records = climatology(body.value("climatology", Json()));
  const auto s = spectrum(body.value("spectrum", Json()), "representative");
  const auto mission = plan_mission(spec, *records, *s);
  const auto report = render_report(mission);
  Json out = {{"plan", wire::plan_to_json(mission)}, {"report_text", report.text}};
  if (wire::boolean_or(body, "save", false)) {
    const auto record = store_.put(wire::to_json(spec), out["plan"]);
    out["id"] = record.id;
    out["created_at"] = record.created_at;
  }
  return out;
}

}  // namespace thermoscope
