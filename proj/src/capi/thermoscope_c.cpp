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

#include "thermoscope/thermoscope.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "camera_geometry.hpp"
#include "climatology.hpp"
#include "corrections.hpp"
#include "error.hpp"
#include "radiative_transfer.hpp"
#include "scene_blending.hpp"
#include "service.hpp"
#include "spectroscopy.hpp"

struct ts_spectrum {
  thermoscope::AbsorptionSpectrum value;
};

struct ts_climatology {
  std::vector<thermoscope::LstRecord> records;
};

struct ts_grid {
  thermoscope::CorrectionGrid value;
};

struct ts_service {
  std::unique_ptr<thermoscope::Service> service;
};

namespace {

using namespace thermoscope;

thread_local std::string last_error;

struct InvalidArgument {
  const char* message = "null argument";
};

ts_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain: return TS_ERR_DOMAIN;
    case ErrorCode::horizon: return TS_ERR_HORIZON;
    case ErrorCode::parse: return TS_ERR_PARSE;
    case ErrorCode::load: return TS_ERR_LOAD;
    case ErrorCode::io: return TS_ERR_IO;
    case ErrorCode::incomplete_day: return TS_ERR_INCOMPLETE_DAY;
    case ErrorCode::insufficient_coverage: return TS_ERR_INSUFFICIENT_COVERAGE;
    case ErrorCode::unsupported_scene: return TS_ERR_UNSUPPORTED_SCENE;
    case ErrorCode::not_found: return TS_ERR_NOT_FOUND;
    case ErrorCode::bad_request: return TS_ERR_BAD_REQUEST;
    case ErrorCode::use_artifact: return TS_ERR_USE_ARTIFACT;
  }
  return TS_ERR_INTERNAL;
}

template <typename F>
ts_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return TS_OK;
  } catch (const InvalidArgument& e) {
    last_error = e.message;
    return TS_ERR_INVALID_ARGUMENT;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return TS_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return TS_ERR_INTERNAL;
  }
}

template <typename... P>
void need(P... pointers) {
  if (((pointers == nullptr) || ...)) throw InvalidArgument{};
}

CameraModel camera_of(const ts_camera* c) {
  need(c);
  CameraModel m{c->pixels_x, c->pixels_y, c->fov_x_deg, c->fov_y_deg, c->relative_sensitivity_k,
                c->absolute_accuracy_k};
  validate(m);
  return m;
}

ts_camera camera_out(const CameraModel& m) {
  return {m.pixels_x, m.pixels_y, m.fov_x_deg, m.fov_y_deg, m.relative_sensitivity_k, m.absolute_accuracy_k};
}

MountConfig mount_of(const ts_mount* m) {
  need(m);
  return {m->phi_deg, m->height_m};
}

Axis axis_of(ts_axis a) {
  switch (a) {
    case TS_AXIS_X: return Axis::x;
    case TS_AXIS_Y: return Axis::y;
    case TS_AXIS_COARSER: return Axis::coarser;
  }
  throw InvalidArgument{"unknown axis"};
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size());
  out[s.size()] = '\0';
  return out;
}

}  // namespace

extern "C" {

const char* ts_version(void) { return "0.1.0"; }

const char* ts_status_name(ts_status status) {
  switch (status) {
    case TS_OK: return "ok";
    case TS_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case TS_ERR_INTERNAL: return "internal";
    default: break;
  }
  for (int code = 0; code <= static_cast<int>(ErrorCode::use_artifact); ++code) {
    if (to_status(static_cast<ErrorCode>(code)) == status) return error_code_name(static_cast<ErrorCode>(code)).data();
  }
  return "unknown";
}

const char* ts_last_error(void) { return last_error.c_str(); }

ts_status ts_camera_preset(const char* name, ts_camera* out) {
  return guarded([&] {
    need(name, out);
    *out = camera_out(camera_preset(name));
  });
}

ts_status ts_camera_load(const char* path, ts_camera* out) {
  return guarded([&] {
    need(path, out);
    *out = camera_out(load_camera_config(path));
  });
}

ts_status ts_height_for_target(const ts_camera* camera, double target_m, int32_t min_pixels, ts_axis axis,
                               double* out_height_m) {
  return guarded([&] {
    need(out_height_m);
    *out_height_m = height_for_target(camera_of(camera), target_m, min_pixels, axis_of(axis));
  });
}

ts_status ts_height_for_center_range(const ts_camera* camera, double phi_deg, double center_range_m,
                                     double* out_height_m) {
  return guarded([&] {
    need(out_height_m);
    *out_height_m = height_for_center_range(camera_of(camera), phi_deg, center_range_m);
  });
}

ts_status ts_nadir_footprint(const ts_camera* camera, double height_m, double* out_x_m, double* out_y_m) {
  return guarded([&] {
    need(out_x_m, out_y_m);
    const auto fp = nadir_footprint(camera_of(camera), height_m);
    *out_x_m = fp.x;
    *out_y_m = fp.y;
  });
}

ts_status ts_angled_footprint(const ts_camera* camera, const ts_mount* mount, ts_footprint* out) {
  return guarded([&] {
    need(out);
    const auto f = angled_footprint(camera_of(camera), mount_of(mount));
    *out = {f.d_c, f.d_m, f.d_f, f.w_c, f.w_m, f.w_f, f.r_c, f.r_m, f.r_f};
  });
}

ts_status ts_range_for_pixel_row(const ts_camera* camera, const ts_mount* mount, double row, double* out_range_m) {
  return guarded([&] {
    need(out_range_m);
    *out_range_m = range_for_pixel_row(camera_of(camera), mount_of(mount), row);
  });
}

ts_status ts_blend(const double* temperatures_k, const double* area_fractions, size_t count, double* out_k) {
  return guarded([&] {
    need(temperatures_k, area_fractions, out_k);
    std::vector<SceneComponent> parts(count);
    for (size_t i = 0; i < count; ++i) parts[i] = {temperatures_k[i], area_fractions[i]};
    *out_k = blend_temperature(parts);
  });
}

ts_status ts_obscured_temperature(double animal_k, double obscurer_k, double cover_fraction, double* out_k) {
  return guarded([&] {
    need(out_k);
    *out_k = obscured_temperature(animal_k, obscurer_k, cover_fraction);
  });
}

ts_status ts_min_resolvable_diameter(double t_obj_k, double t_bg_k, double max_relative_error, int32_t* out_px) {
  return guarded([&] {
    need(out_px);
    *out_px = min_resolvable_diameter(t_obj_k, t_bg_k, max_relative_error);
  });
}

ts_status ts_spectrum_gray(double kappa_per_m, double step_cm1, ts_spectrum** out) {
  return guarded([&] {
    need(out);
    *out = new ts_spectrum{gray_spectrum(kappa_per_m, {714.0, 1250.0, step_cm1})};
  });
}

ts_status ts_spectrum_load_table(const char* path, ts_spectrum** out) {
  return guarded([&] {
    need(path, out);
    *out = new ts_spectrum{load_spectrum_table(path)};
  });
}

ts_status ts_spectrum_from_lines(const char* path, double air_k, double pressure_kpa, double rh_pct,
                                 double step_cm1, ts_spectrum** out) {
  return guarded([&] {
    need(path, out);
    const auto lines = load_line_list(path);
    *out = new ts_spectrum{absorption_spectrum(lines, {air_k, pressure_kpa, rh_pct}, {714.0, 1250.0, step_cm1})};
  });
}

ts_status ts_spectrum_resample(const ts_spectrum* spectrum, double step_cm1, ts_spectrum** out) {
  return guarded([&] {
    need(spectrum, out);
    *out = new ts_spectrum{resample_mean(spectrum->value, step_cm1)};
  });
}

ts_status ts_spectrum_write_table(const ts_spectrum* spectrum, const char* path) {
  return guarded([&] {
    need(spectrum, path);
    std::ofstream file(path, std::ios::trunc);
    if (!file) throw Error(ErrorCode::io, std::string("cannot open ") + path);
    write_spectrum_table(file, spectrum->value);
    file.flush();
    if (!file) throw Error(ErrorCode::io, std::string("write failed for ") + path);
  });
}

size_t ts_spectrum_size(const ts_spectrum* spectrum) { return spectrum == nullptr ? 0 : spectrum->value.size(); }

void ts_spectrum_free(ts_spectrum* spectrum) { delete spectrum; }

ts_status ts_observed_temperatures(const ts_spectrum* spectrum, double source_k, double medium_k,
                                   const double* distances_m, size_t count, double* out_k) {
  return guarded([&] {
    need(spectrum, distances_m, out_k);
    const BandTransmission transmission(spectrum->value, source_k, medium_k);
    for (size_t i = 0; i < count; ++i) {
      require(distances_m[i] >= 0.0 && (i == 0 || distances_m[i] >= distances_m[i - 1]),
              "distances must be non-negative and sorted");
      out_k[i] = observed_temperature(source_k, transmission(distances_m[i]));
    }
  });
}

ts_status ts_climatology_load(const char* path, ts_climatology** out) {
  return guarded([&] {
    need(path, out);
    *out = new ts_climatology{load_climatology(path)};
  });
}

size_t ts_climatology_size(const ts_climatology* climatology) {
  return climatology == nullptr ? 0 : climatology->records.size();
}

void ts_climatology_free(ts_climatology* climatology) { delete climatology; }

ts_status ts_climatology_eval(const ts_climatology* climatology, int32_t day_of_year, double solar_h,
                              double* out_mean_k, double* out_two_sigma_k) {
  return guarded([&] {
    need(climatology, out_mean_k, out_two_sigma_k);
    const auto curve = diurnal_curve(climatology->records, day_of_year);
    *out_mean_k = curve.mean(solar_h);
    *out_two_sigma_k = curve.two_sigma(solar_h);
  });
}

ts_status ts_climatology_windows(const ts_climatology* climatology, int32_t day_of_year, double animal_k,
                                 double min_contrast_k, ts_window* out, size_t capacity, size_t* out_count) {
  return guarded([&] {
    need(climatology, out_count);
    if (capacity > 0) need(out);
    const auto windows = contrast_windows(diurnal_curve(climatology->records, day_of_year), animal_k, min_contrast_k);
    for (size_t i = 0; i < windows.size() && i < capacity; ++i) {
      out[i] = {windows[i].start_h, windows[i].end_h, windows[i].worst_case_contrast_k};
    }
    *out_count = windows.size();
  });
}

ts_status ts_solar_time_offset(double longitude_deg, double utc_offset_h, int32_t day_of_year, double* out_min) {
  return guarded([&] {
    need(out_min);
    *out_min = solar_time_offset_min(longitude_deg, utc_offset_h, day_of_year);
  });
}

ts_status ts_grid_range(const ts_camera* camera, const ts_mount* mount, ts_grid** out) {
  return guarded([&] {
    need(out);
    *out = new ts_grid{range_grid(camera_of(camera), mount_of(mount))};
  });
}

ts_status ts_grid_pixel_scale(const ts_camera* camera, const ts_mount* mount, ts_axis axis, ts_grid** out) {
  return guarded([&] {
    need(out);
    *out = new ts_grid{pixel_scale_grid(camera_of(camera), mount_of(mount), axis_of(axis))};
  });
}

ts_status ts_grid_temperature(const ts_camera* camera, const ts_mount* mount, double source_k, double medium_k,
                              const ts_spectrum* spectrum, ts_grid** out) {
  return guarded([&] {
    need(spectrum, out);
    *out = new ts_grid{temperature_grid(camera_of(camera), mount_of(mount), source_k, medium_k, spectrum->value)};
  });
}

int32_t ts_grid_width(const ts_grid* grid) { return grid == nullptr ? 0 : grid->value.width; }

int32_t ts_grid_height(const ts_grid* grid) { return grid == nullptr ? 0 : grid->value.height; }

ts_grid_kind ts_grid_kind_of(const ts_grid* grid) {
  return grid == nullptr ? TS_GRID_RANGE_M : static_cast<ts_grid_kind>(grid->value.kind);
}

const double* ts_grid_values(const ts_grid* grid) { return grid == nullptr ? nullptr : grid->value.values.data(); }

ts_status ts_grid_export(const ts_grid* grid, const char* path, ts_raster_format format) {
  return guarded([&] {
    need(grid, path);
    if (format != TS_RASTER_CSV && format != TS_RASTER_F32) throw InvalidArgument{"unknown raster format"};
    export_raster(grid->value, path, format == TS_RASTER_CSV ? RasterFormat::csv : RasterFormat::f32);
  });
}

void ts_grid_free(ts_grid* grid) { delete grid; }

ts_status ts_service_create(const char* data_dir, const char* store_dir, int allow_local_paths, ts_service** out) {
  return guarded([&] {
    need(out);
    auto config = default_service_config();
    if (data_dir != nullptr) config.data_dir = data_dir;
    if (store_dir != nullptr) config.store_dir = store_dir;
    config.allow_local_paths = allow_local_paths != 0;
    *out = new ts_service{std::make_unique<Service>(std::move(config))};
  });
}

void ts_service_free(ts_service* service) { delete service; }

ts_status ts_service_handle(ts_service* service, const char* method, const char* path, const char* body,
                            size_t body_length, int32_t* out_http_status, char** out_body, size_t* out_body_length,
                            char** out_content_type) {
  return guarded([&] {
    need(service, method, path, out_http_status, out_body);
    if (body == nullptr && body_length > 0) throw InvalidArgument{};
    const auto response =
        service->service->handle(method, path, body == nullptr ? std::string_view{} : std::string_view(body, body_length));
    char* text = copy_string(response.body);
    char* type = nullptr;
    if (out_content_type != nullptr) {
      try {
        type = copy_string(response.content_type);
      } catch (...) {
        std::free(text);
        throw;
      }
      *out_content_type = type;
    }
    *out_http_status = response.status;
    *out_body = text;
    if (out_body_length != nullptr) *out_body_length = response.body.size();
  });
}

void ts_string_free(char* text) { std::free(text); }

}  // extern "C"
