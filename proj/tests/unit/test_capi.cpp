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

#include <doctest.h>

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include <thermoscope/thermoscope.h>

#include "test_support.hpp"

namespace {

std::string data(const char* rel) { return (testing::data_dir() / rel).string(); }

ts_camera tau() {
  ts_camera c{};
  REQUIRE(ts_camera_preset("tau640", &c) == TS_OK);
  return c;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(ts_version()) == "0.1.0");
  CHECK(std::string(ts_status_name(TS_OK)) == "ok");
  CHECK(std::string(ts_status_name(TS_ERR_HORIZON)) == "horizon");
  CHECK(std::string(ts_status_name(TS_ERR_USE_ARTIFACT)) == "use_artifact");
  CHECK(std::string(ts_status_name(static_cast<ts_status>(99))) == "unknown");
}

TEST_CASE("geometry through the C API") {
  const auto cam = tau();
  CHECK(cam.pixels_x == 640);
  double h = 0.0;
  REQUIRE(ts_height_for_target(&cam, 1.0, 10, TS_AXIS_X, &h) == TS_OK);
  CHECK_NEAR(h, 81.48728995689197, 1e-9);
  REQUIRE(ts_height_for_center_range(&cam, 60.0, 81.5, &h) == TS_OK);
  CHECK_NEAR(h, 40.75, 1e-9);
  double x = 0.0, y = 0.0;
  REQUIRE(ts_nadir_footprint(&cam, 81.5, &x, &y) == TS_OK);
  CHECK_NEAR(x, 67.5, 0.1);
  CHECK_NEAR(y, 54.5, 0.1);
  const ts_mount mount{45.0, 15.0};
  ts_footprint fp{};
  REQUIRE(ts_angled_footprint(&cam, &mount, &fp) == TS_OK);
  CHECK_NEAR(fp.d_f_m - fp.d_c_m, 22.606621503083815, 1e-9);
  CHECK_NEAR(fp.w_c_m, 13.885271819207274, 1e-9);
  const ts_mount m30{30.0, 100.0};
  double r = 0.0;
  REQUIRE(ts_range_for_pixel_row(&cam, &m30, 0.0, &r) == TS_OK);
  CHECK_NEAR(r, 102.04865693093618, 1e-9);

  ts_camera loaded{};
  REQUIRE(ts_camera_load(data("cameras/tau640.cfg").c_str(), &loaded) == TS_OK);
  CHECK(loaded.fov_y_deg == cam.fov_y_deg);
}

TEST_CASE("errors are reported per thread") {
  const auto cam = tau();
  const ts_mount steep{85.0, 10.0};
  ts_footprint fp{};
  CHECK(ts_angled_footprint(&cam, &steep, &fp) == TS_ERR_HORIZON);
  CHECK(std::strlen(ts_last_error()) > 0);
  std::string other;
  std::thread([&] { other = ts_last_error(); }).join();
  CHECK(other.empty());
  double h = 0.0;
  CHECK(ts_height_for_target(&cam, 1.0, 10, TS_AXIS_X, &h) == TS_OK);
  CHECK(std::string(ts_last_error()).empty());

  ts_camera c{};
  CHECK(ts_camera_preset("nope", &c) == TS_ERR_NOT_FOUND);
  CHECK(ts_camera_preset(nullptr, &c) == TS_ERR_INVALID_ARGUMENT);
  CHECK(ts_height_for_target(nullptr, 1.0, 10, TS_AXIS_X, &h) == TS_ERR_INVALID_ARGUMENT);
  CHECK(ts_height_for_target(&cam, 1.0, 10, TS_AXIS_X, nullptr) == TS_ERR_INVALID_ARGUMENT);
  CHECK(ts_height_for_target(&cam, -1.0, 10, TS_AXIS_X, &h) == TS_ERR_DOMAIN);
  CHECK(ts_height_for_target(&cam, 1.0, 10, static_cast<ts_axis>(7), &h) == TS_ERR_INVALID_ARGUMENT);
  CHECK(ts_camera_load("/nonexistent.cfg", &c) == TS_ERR_IO);
}

TEST_CASE("blending") {
  const double t[] = {293.15, 278.15};
  const double a[] = {0.3, 0.7};
  double out = 0.0;
  REQUIRE(ts_blend(t, a, 2, &out) == TS_OK);
  CHECK_NEAR(out, 282.65, 1e-9);
  const double bad[] = {0.7, 0.7};
  CHECK(ts_blend(t, bad, 2, &out) == TS_ERR_DOMAIN);
  CHECK(ts_blend(nullptr, a, 2, &out) == TS_ERR_INVALID_ARGUMENT);
  REQUIRE(ts_obscured_temperature(293.15, 278.15, 0.75, &out) == TS_OK);
  CHECK_NEAR(out, 281.9, 1e-9);
  int32_t px = 0;
  REQUIRE(ts_min_resolvable_diameter(303.15, 293.15, 0.25, &px) == TS_OK);
  CHECK(px > 1);
  CHECK(px < 20);
}

TEST_CASE("spectra and transmission") {
  ts_spectrum* gray = nullptr;
  REQUIRE(ts_spectrum_gray(0.0, 0.5, &gray) == TS_OK);
  CHECK(ts_spectrum_size(gray) == 1073u);
  const double d[] = {0.0, 100.0, 1000.0};
  double t[3] = {};
  REQUIRE(ts_observed_temperatures(gray, 300.0, 280.0, d, 3, t) == TS_OK);
  for (double v : t) CHECK(v == doctest::Approx(300.0).epsilon(1e-12));
  ts_spectrum_free(gray);

  ts_spectrum* rep = nullptr;
  REQUIRE(ts_spectrum_load_table(data("spectra/representative.csv").c_str(), &rep) == TS_OK);
  const double hundred[] = {100.0};
  REQUIRE(ts_observed_temperatures(rep, 298.15, 273.15, hundred, 1, t) == TS_OK);
  CHECK(298.15 - t[0] >= 0.1);
  CHECK(298.15 - t[0] <= 1.0);
  const double unsorted[] = {10.0, 1.0};
  CHECK(ts_observed_temperatures(rep, 298.15, 273.15, unsorted, 2, t) == TS_ERR_DOMAIN);

  ts_spectrum* coarse = nullptr;
  REQUIRE(ts_spectrum_resample(rep, 2.0, &coarse) == TS_OK);
  CHECK(ts_spectrum_size(coarse) < ts_spectrum_size(rep));
  testing::TempDir dir;
  const auto path = (dir.path() / "coarse.csv").string();
  REQUIRE(ts_spectrum_write_table(coarse, path.c_str()) == TS_OK);
  ts_spectrum* back = nullptr;
  REQUIRE(ts_spectrum_load_table(path.c_str(), &back) == TS_OK);
  CHECK(ts_spectrum_size(back) == ts_spectrum_size(coarse));
  ts_spectrum_free(back);
  ts_spectrum_free(coarse);
  ts_spectrum_free(rep);
  ts_spectrum_free(nullptr);

  ts_spectrum* none = nullptr;
  CHECK(ts_spectrum_load_table("/nonexistent.csv", &none) == TS_ERR_IO);
  CHECK(none == nullptr);
}

TEST_CASE("climatology") {
  ts_climatology* c = nullptr;
  REQUIRE(ts_climatology_load(data("climatology/loxton_like.csv").c_str(), &c) == TS_OK);
  CHECK(ts_climatology_size(c) == 1460u);
  double mean = 0.0, sigma = 0.0;
  REQUIRE(ts_climatology_eval(c, 268, 13.5, &mean, &sigma) == TS_OK);
  CHECK(mean > 280.0);
  CHECK(sigma > 0.0);
  size_t count = 0;
  REQUIRE(ts_climatology_windows(c, 268, 293.15, 0.0, nullptr, 0, &count) == TS_OK);
  CHECK(count == 2u);
  std::vector<ts_window> w(count);
  REQUIRE(ts_climatology_windows(c, 268, 293.15, 0.0, w.data(), w.size(), &count) == TS_OK);
  CHECK(w[0].start_h == 0.0);
  CHECK_NEAR(w[0].end_h, 8.0, 0.5);
  CHECK_NEAR(w[1].start_h, 19.0, 0.5);
  ts_window one{};
  REQUIRE(ts_climatology_windows(c, 268, 293.15, 0.0, &one, 1, &count) == TS_OK);
  CHECK(count == 2u);
  CHECK(one.start_h == w[0].start_h);
  CHECK(ts_climatology_eval(c, 400, 1.0, &mean, &sigma) == TS_ERR_INCOMPLETE_DAY);
  ts_climatology_free(c);

  double offset = 0.0;
  REQUIRE(ts_solar_time_offset(22.354109, 2.0, 268, &offset) == TS_OK);
  CHECK_NEAR(offset, -22.2, 0.1);
}

TEST_CASE("corrections grids") {
  const auto cam = tau();
  const ts_mount mount{30.0, 100.0};
  ts_grid* g = nullptr;
  REQUIRE(ts_grid_range(&cam, &mount, &g) == TS_OK);
  CHECK(ts_grid_width(g) == 640);
  CHECK(ts_grid_height(g) == 512);
  CHECK(ts_grid_kind_of(g) == TS_GRID_RANGE_M);
  const double* v = ts_grid_values(g);
  CHECK(v[319] > 100.0);
  testing::TempDir dir;
  const auto path = (dir.path() / "range.tirc").string();
  REQUIRE(ts_grid_export(g, path.c_str(), TS_RASTER_F32) == TS_OK);
  CHECK(std::filesystem::file_size(path) == 16u + 640u * 512u * 4u);
  CHECK(ts_grid_export(g, path.c_str(), static_cast<ts_raster_format>(5)) == TS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ts_last_error()) == "unknown raster format");

  ts_grid* p = nullptr;
  REQUIRE(ts_grid_pixel_scale(&cam, &mount, TS_AXIS_Y, &p) == TS_OK);
  CHECK(ts_grid_kind_of(p) == TS_GRID_PIXEL_SCALE_M);
  CHECK(ts_grid_values(p)[0] < v[0]);
  CHECK(ts_grid_pixel_scale(&cam, &mount, TS_AXIS_COARSER, &p) == TS_ERR_DOMAIN);

  ts_spectrum* gray = nullptr;
  REQUIRE(ts_spectrum_gray(1e-3, 0.5, &gray) == TS_OK);
  ts_grid* t = nullptr;
  REQUIRE(ts_grid_temperature(&cam, &mount, 303.15, 283.15, gray, &t) == TS_OK);
  CHECK(ts_grid_kind_of(t) == TS_GRID_T_OBS_K);
  CHECK(ts_grid_values(t)[0] > ts_grid_values(t)[640 * 511]);
  ts_grid_free(t);
  ts_spectrum_free(gray);
  ts_grid_free(p);
  ts_grid_free(g);

  const ts_mount steep{75.0, 10.0};
  ts_grid* none = nullptr;
  CHECK(ts_grid_range(&cam, &steep, &none) == TS_ERR_HORIZON);
}

TEST_CASE("service handle") {
  testing::TempDir store;
  ts_service* s = nullptr;
  REQUIRE(ts_service_create(testing::data_dir().c_str(), store.path().c_str(), 0, &s) == TS_OK);
  int32_t status = 0;
  char* body = nullptr;
  size_t length = 0;
  char* type = nullptr;
  REQUIRE(ts_service_handle(s, "GET", "/v1/health", nullptr, 0, &status, &body, &length, &type) == TS_OK);
  CHECK(status == 200);
  CHECK(std::string(type) == "application/json");
  CHECK(std::string(body, length).find("\"ok\"") != std::string::npos);
  CHECK(body[length] == '\0');
  ts_string_free(body);
  ts_string_free(type);

  const std::string request = R"({"components":[{"t_k":293.15,"a":0.5},{"t_k":288.15,"a":0.5}]})";
  REQUIRE(ts_service_handle(s, "POST", "/v1/blend", request.data(), request.size(), &status, &body, &length, nullptr) ==
          TS_OK);
  CHECK(status == 200);
  CHECK(std::string(body, length).find("290.65") != std::string::npos);
  ts_string_free(body);

  REQUIRE(ts_service_handle(s, "GET", "/v1/plans/unknown", nullptr, 0, &status, &body, &length, nullptr) == TS_OK);
  CHECK(status == 404);
  ts_string_free(body);
  CHECK(ts_service_handle(s, nullptr, "/v1/health", nullptr, 0, &status, &body, &length, nullptr) ==
        TS_ERR_INVALID_ARGUMENT);
  ts_service_free(s);
  ts_service_free(nullptr);
}
