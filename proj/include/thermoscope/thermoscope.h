/*
 * Copyright 2026 The Thermoscope Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Thermoscope C API.
 *
 * Every fallible call returns a ts_status. On failure the message is
 * available from ts_last_error() on the same thread until the next call.
 * Handles are opaque; free each with its matching *_free function. Handles
 * are immutable after creation and may be shared between threads, except
 * ts_service, which serializes internally.
 *
 * Temperatures are kelvin, lengths metres, angles degrees.
 */

#ifndef THERMOSCOPE_H
#define THERMOSCOPE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef THERMOSCOPE_BUILDING
#    define TS_API __declspec(dllexport)
#  else
#    define TS_API __declspec(dllimport)
#  endif
#else
#  define TS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
  TS_OK = 0,
  TS_ERR_DOMAIN = 1,
  TS_ERR_HORIZON = 2,
  TS_ERR_PARSE = 3,
  TS_ERR_LOAD = 4,
  TS_ERR_IO = 5,
  TS_ERR_INCOMPLETE_DAY = 6,
  TS_ERR_INSUFFICIENT_COVERAGE = 7,
  TS_ERR_UNSUPPORTED_SCENE = 8,
  TS_ERR_NOT_FOUND = 9,
  TS_ERR_BAD_REQUEST = 10,
  TS_ERR_USE_ARTIFACT = 11,
  TS_ERR_INVALID_ARGUMENT = 12,
  TS_ERR_INTERNAL = 13
} ts_status;

TS_API const char* ts_version(void);
/* Snake-case name, e.g. "horizon". */
TS_API const char* ts_status_name(ts_status status);
/* Message of the last failed call on this thread, or "". */
TS_API const char* ts_last_error(void);

/* ---- camera geometry ---- */

typedef enum ts_axis { TS_AXIS_X = 0, TS_AXIS_Y = 1, TS_AXIS_COARSER = 2 } ts_axis;

typedef struct ts_camera {
  int32_t pixels_x;
  int32_t pixels_y;
  double fov_x_deg;
  double fov_y_deg;
  double relative_sensitivity_k;
  double absolute_accuracy_k;
} ts_camera;

typedef struct ts_mount {
  double phi_deg; /* from nadir */
  double height_m;
} ts_mount;

typedef struct ts_footprint {
  double d_c_m, d_m_m, d_f_m;
  double w_c_m, w_m_m, w_f_m;
  double r_c_m, r_m_m, r_f_m;
} ts_footprint;

TS_API ts_status ts_camera_preset(const char* name, ts_camera* out);
TS_API ts_status ts_camera_load(const char* path, ts_camera* out);

TS_API ts_status ts_height_for_target(const ts_camera* camera, double target_m, int32_t min_pixels, ts_axis axis,
                                      double* out_height_m);
TS_API ts_status ts_height_for_center_range(const ts_camera* camera, double phi_deg, double center_range_m,
                                            double* out_height_m);
TS_API ts_status ts_nadir_footprint(const ts_camera* camera, double height_m, double* out_x_m, double* out_y_m);
TS_API ts_status ts_angled_footprint(const ts_camera* camera, const ts_mount* mount, ts_footprint* out);
/* Row 0 is the near edge; row + 0.5 is the centre of pixel row. */
TS_API ts_status ts_range_for_pixel_row(const ts_camera* camera, const ts_mount* mount, double row,
                                        double* out_range_m);

/* ---- blending ---- */

TS_API ts_status ts_blend(const double* temperatures_k, const double* area_fractions, size_t count, double* out_k);
TS_API ts_status ts_obscured_temperature(double animal_k, double obscurer_k, double cover_fraction, double* out_k);
TS_API ts_status ts_min_resolvable_diameter(double t_obj_k, double t_bg_k, double max_relative_error,
                                            int32_t* out_px);

/* ---- absorption spectra and transmission ---- */

typedef struct ts_spectrum ts_spectrum;

TS_API ts_status ts_spectrum_gray(double kappa_per_m, double step_cm1, ts_spectrum** out);
TS_API ts_status ts_spectrum_load_table(const char* path, ts_spectrum** out);
/* Line-by-line from a fixed-width line list at the given conditions. */
TS_API ts_status ts_spectrum_from_lines(const char* path, double air_k, double pressure_kpa, double rh_pct,
                                        double step_cm1, ts_spectrum** out);
TS_API ts_status ts_spectrum_resample(const ts_spectrum* spectrum, double step_cm1, ts_spectrum** out);
TS_API ts_status ts_spectrum_write_table(const ts_spectrum* spectrum, const char* path);
TS_API size_t ts_spectrum_size(const ts_spectrum* spectrum);
TS_API void ts_spectrum_free(ts_spectrum* spectrum);

/* Band-averaged observed temperature at each distance (sorted ascending). */
TS_API ts_status ts_observed_temperatures(const ts_spectrum* spectrum, double source_k, double medium_k,
                                          const double* distances_m, size_t count, double* out_k);

/* ---- climatology ---- */

typedef struct ts_climatology ts_climatology;

typedef struct ts_window {
  double start_h;
  double end_h;
  double worst_case_contrast_k;
} ts_window;

TS_API ts_status ts_climatology_load(const char* path, ts_climatology** out);
TS_API size_t ts_climatology_size(const ts_climatology* climatology);
TS_API void ts_climatology_free(ts_climatology* climatology);
TS_API ts_status ts_climatology_eval(const ts_climatology* climatology, int32_t day_of_year, double solar_h,
                                     double* out_mean_k, double* out_two_sigma_k);
/* Writes up to `capacity` windows; *out_count receives the total found. */
TS_API ts_status ts_climatology_windows(const ts_climatology* climatology, int32_t day_of_year, double animal_k,
                                        double min_contrast_k, ts_window* out, size_t capacity, size_t* out_count);
TS_API ts_status ts_solar_time_offset(double longitude_deg, double utc_offset_h, int32_t day_of_year,
                                      double* out_min);

/* ---- corrections grids ---- */

typedef struct ts_grid ts_grid;

typedef enum ts_grid_kind { TS_GRID_RANGE_M = 0, TS_GRID_PIXEL_SCALE_M = 1, TS_GRID_T_OBS_K = 2 } ts_grid_kind;
typedef enum ts_raster_format { TS_RASTER_CSV = 0, TS_RASTER_F32 = 1 } ts_raster_format;

TS_API ts_status ts_grid_range(const ts_camera* camera, const ts_mount* mount, ts_grid** out);
TS_API ts_status ts_grid_pixel_scale(const ts_camera* camera, const ts_mount* mount, ts_axis axis, ts_grid** out);
TS_API ts_status ts_grid_temperature(const ts_camera* camera, const ts_mount* mount, double source_k,
                                     double medium_k, const ts_spectrum* spectrum, ts_grid** out);
TS_API int32_t ts_grid_width(const ts_grid* grid);
TS_API int32_t ts_grid_height(const ts_grid* grid);
TS_API ts_grid_kind ts_grid_kind_of(const ts_grid* grid);
/* Row-major, width * height values, valid until ts_grid_free. */
TS_API const double* ts_grid_values(const ts_grid* grid);
TS_API ts_status ts_grid_export(const ts_grid* grid, const char* path, ts_raster_format format);
TS_API void ts_grid_free(ts_grid* grid);

/* ---- JSON service ---- */

typedef struct ts_service ts_service;

/* NULL directories fall back to THERMOSCOPE_DATA / THERMOSCOPE_STORE and
   the built-in defaults. allow_local_paths lets requests name arbitrary
   local files; leave it 0 for anything reachable over a network. */
TS_API ts_status ts_service_create(const char* data_dir, const char* store_dir, int allow_local_paths,
                                   ts_service** out);
TS_API void ts_service_free(ts_service* service);
/* Handles one /v1 request. The response is NUL-terminated and must be
   released with ts_string_free. Returns TS_OK whenever a response was
   produced, including HTTP error responses. */
TS_API ts_status ts_service_handle(ts_service* service, const char* method, const char* path, const char* body,
                                   size_t body_length, int32_t* out_http_status, char** out_body,
                                   size_t* out_body_length, char** out_content_type);
TS_API void ts_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* THERMOSCOPE_H */
