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

#include <numbers>

#include "camera_geometry.hpp"
#include "error.hpp"
#include "test_support.hpp"

using namespace thermoscope;

namespace {

double rad(double deg) { return deg * std::numbers::pi / 180.0; }

CameraModel random_camera(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> px(1, 2048);
  std::uniform_real_distribution<double> fov(1.0, 120.0);
  return {px(rng), px(rng), fov(rng), fov(rng), 0.05, 5.0};
}

const CameraModel tau = tau640_camera();

}  // namespace

TEST_CASE("angular pixel scale per axis") {
  CHECK(angular_pixel_scale(tau, Axis::x) == doctest::Approx(0.0703125).epsilon(1e-12));
  CHECK_NEAR(angular_pixel_scale(tau, Axis::y), 0.0722656, 1e-7);
  CHECK(angular_pixel_scale({1, 1, 45.0, 45.0}, Axis::x) == 45.0);
  CHECK(angular_pixel_scale(tau, Axis::coarser) == angular_pixel_scale(tau, Axis::y));
}

TEST_CASE("nadir pixel scale") {
  CHECK_NEAR(nadir_pixel_scale(tau, 81.5).x, 0.1, 5e-4);
  CHECK_NEAR(nadir_pixel_scale(tau, 20.4).x, 0.025, 5e-5);
  CHECK(nadir_pixel_scale(tau, 1e-9).x < 1e-11);
  CHECK_ERROR_CODE(nadir_pixel_scale(tau, 0.0), ErrorCode::domain);
  CHECK_ERROR_CODE(nadir_pixel_scale(tau, -1.0), ErrorCode::domain);
}

TEST_CASE("height for a target size") {
  // 0.1 m / tan(45/640 deg), evaluated independently.
  CHECK_NEAR(height_for_target(tau, 1.0, 10), 81.48728995689197, 1e-9);
  CHECK_NEAR(height_for_target(tau, 1.0, 10), 81.5, 0.1);
  CHECK_NEAR(height_for_target(tau, 0.25, 10), 20.371822489222993, 1e-9);
  CHECK_NEAR(height_for_target(tau, 0.30, 10), 24.446186987067588, 1e-9);
  CHECK_ERROR_CODE(height_for_target(tau, 0.0, 10), ErrorCode::domain);
  CHECK_ERROR_CODE(height_for_target(tau, 1.0, 0), ErrorCode::domain);
  // The coarser axis is y for this camera and gives a lower height.
  CHECK(height_for_target(tau, 1.0, 10, Axis::coarser) < height_for_target(tau, 1.0, 10, Axis::x));
}

TEST_CASE("nadir footprint") {
  const auto fp = nadir_footprint(tau, 81.5);
  CHECK_NEAR(fp.x, 67.5, 0.1);
  CHECK_NEAR(fp.y, 54.5, 0.1);
  const auto twice = nadir_footprint(tau, 163.0);
  CHECK_NEAR(twice.x, 135.0, 0.1);
  CHECK_NEAR(twice.y, 109.0, 0.1);
  CHECK(twice.x == doctest::Approx(2.0 * fp.x).epsilon(1e-14));
  CHECK_NEAR(fp.x, 2.0 * 81.5 * std::tan(rad(22.5)), 1e-12);
}

TEST_CASE("angled footprint, 45 degrees at 15 m") {
  const auto fp = angled_footprint(tau, {45.0, 15.0});
  CHECK_NEAR(fp.d_f - fp.d_c, 22.606621503083815, 1e-9);
  CHECK_NEAR(fp.d_f - fp.d_c, 22.6, 0.1);
  CHECK_NEAR(fp.w_c, 13.885271819207274, 1e-9);
  CHECK_NEAR(fp.w_c, 13.9, 0.2);
  CHECK_NEAR(fp.w_f, 27.849546784163017, 1e-9);
  CHECK_NEAR(fp.w_f, 28.3, 0.5);
  CHECK_NEAR(fp.r_m, 15.0 * std::sqrt(2.0), 1e-12);
}

TEST_CASE("angled footprint at nadir is symmetric") {
  for (double h : {1.0, 15.0, 81.5, 400.0}) {
    const auto fp = angled_footprint(tau, {0.0, h});
    CHECK_NEAR(fp.d_c, -fp.d_f, 1e-12 * h);
    CHECK(fp.r_m == h);
    CHECK(fp.d_m == 0.0);
  }
}

TEST_CASE("field of view reaching the horizon is an error") {
  CHECK_ERROR_CODE(angled_footprint(tau, {71.5, 10.0}), ErrorCode::horizon);
  CHECK_ERROR_CODE(angled_footprint(tau, {80.0, 10.0}), ErrorCode::horizon);
  CHECK_ERROR_CODE(range_for_pixel_row(tau, {80.0, 10.0}, 512), ErrorCode::horizon);
  CHECK_NOTHROW(range_for_pixel_row(tau, {80.0, 10.0}, 0));
}

TEST_CASE("height for a centre range") {
  CHECK_NEAR(height_for_center_range(tau, 60.0, 81.5), 40.75, 1e-9);
  CHECK_NEAR(height_for_center_range(tau, 45.0, 20.0), 14.142135623730951, 1e-9);
  CHECK(height_for_center_range(tau, 0.0, 100.0) == 100.0);
  CHECK_ERROR_CODE(height_for_center_range(tau, 45.0, 0.0), ErrorCode::domain);
}

TEST_CASE("range for a pixel row") {
  const MountConfig mount{30.0, 100.0};
  CHECK_NEAR(range_for_pixel_row(tau, mount, 0), 102.04865693093618, 1e-9);
  CHECK_NEAR(range_for_pixel_row(tau, mount, 512), 150.9160495057067, 1e-9);
  CHECK_NEAR(range_for_pixel_row(tau, {0.0, 100.0}, 256), 100.0, 1e-9);
  CHECK_ERROR_CODE(range_for_pixel_row(tau, mount, -1), ErrorCode::domain);
  CHECK_ERROR_CODE(range_for_pixel_row(tau, mount, 513), ErrorCode::domain);
}

TEST_CASE("pixel scale at a row") {
  CHECK_NEAR(pixel_scale_at(tau, {0.0, 81.5}, 256).x, 0.1, 5e-4);
  const double h = height_for_center_range(tau, 45.0, 20.0);
  CHECK_NEAR(pixel_scale_at(tau, {45.0, h}, 256).x, 0.0245, 5e-4);
  const auto near = pixel_scale_at(tau, {0.0, 50.0}, 256);
  const auto far = pixel_scale_at(tau, {0.0, 100.0}, 256);
  CHECK(far.x == doctest::Approx(2.0 * near.x).epsilon(1e-14));
}

TEST_CASE("camera config parsing") {
  const auto cam = parse_camera_config("# comment\npixels_x = 320\npixels_y=256\nfov_x_deg=24\nfov_y_deg=18\n");
  CHECK(cam.pixels_x == 320);
  CHECK(cam.fov_y_deg == 18.0);
  CHECK(cam.relative_sensitivity_k == 0.05);
  CHECK_ERROR_CODE(parse_camera_config("pixels_x=1\nbogus=2\n"), ErrorCode::parse);
  CHECK_ERROR_CODE(parse_camera_config("pixels_x=abc\n"), ErrorCode::parse);
  CHECK_ERROR_CODE(parse_camera_config("pixels_x=640\n"), ErrorCode::parse);
  const auto bundled = load_camera_config(testing::data_dir() / "cameras" / "tau640.cfg");
  CHECK(bundled.pixels_x == tau.pixels_x);
  CHECK(bundled.pixels_y == tau.pixels_y);
  CHECK(bundled.fov_x_deg == tau.fov_x_deg);
  CHECK(bundled.fov_y_deg == tau.fov_y_deg);
  CHECK_ERROR_CODE(camera_preset("nope"), ErrorCode::not_found);
}

TEST_CASE("property: pixel scale and height round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> height(0.5, 5000.0);
  for (int i = 0; i < 500; ++i) {
    const auto cam = random_camera(rng);
    const double h = height(rng);
    for (Axis axis : {Axis::x, Axis::y}) {
      const auto scale = nadir_pixel_scale(cam, h);
      const double back = height_for_pixel_scale(cam, axis == Axis::x ? scale.x : scale.y, axis);
      CHECK(back == doctest::Approx(h).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: height for target matches the nadir scale on the chosen axis") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> length(0.01, 10.0);
  for (int i = 0; i < 500; ++i) {
    const auto cam = random_camera(rng);
    const double l = length(rng);
    const double h = height_for_target(cam, l, 10, Axis::coarser);
    const auto scale = nadir_pixel_scale(cam, h);
    CHECK(std::max(scale.x, scale.y) == doctest::Approx(l / 10.0).epsilon(1e-9));
    const double hx = height_for_target(cam, l, 10);
    CHECK(nadir_pixel_scale(cam, hx).x == doctest::Approx(l / 10.0).epsilon(1e-9));
  }
}

TEST_CASE("property: angled footprint ordering and range identity") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> height(1.0, 500.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const auto cam = random_camera(rng);
    const double half = cam.fov_y_deg / 2.0;
    if (half >= 89.0) continue;
    const double phi = unit(rng) * (89.9 - half);
    const MountConfig mount{phi, height(rng)};
    const auto fp = angled_footprint(cam, mount);
    const double h = mount.height_m;
    CHECK(fp.d_c < fp.d_m);
    CHECK(fp.d_m < fp.d_f);
    CHECK(fp.r_c * fp.r_c == doctest::Approx(h * h + fp.d_c * fp.d_c).epsilon(1e-12));
    CHECK(fp.r_m * fp.r_m == doctest::Approx(h * h + fp.d_m * fp.d_m).epsilon(1e-12));
    CHECK(fp.r_f * fp.r_f == doctest::Approx(h * h + fp.d_f * fp.d_f).epsilon(1e-12));
    if (phi > 0.0 && fp.d_c > 0.0) {
      CHECK(fp.w_c < fp.w_m);
      CHECK(fp.w_m < fp.w_f);
    }
  }
}

TEST_CASE("property: range increases with row when the whole view is ahead of nadir") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    auto cam = random_camera(rng);
    cam.pixels_y = 1 + static_cast<int>(unit(rng) * 300);
    const double half = cam.fov_y_deg / 2.0;
    if (half >= 44.0) continue;
    const double phi = half + 0.01 + unit(rng) * (89.0 - 2.0 * half);
    const MountConfig mount{phi, 10.0 + 100.0 * unit(rng)};
    double previous = 0.0;
    for (int row = 0; row <= cam.pixels_y; ++row) {
      const double r = range_for_pixel_row(cam, mount, row);
      CHECK(r > previous);
      previous = r;
    }
  }
}

TEST_CASE("property: per-row range matches the scalar trig oracle") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const auto cam = random_camera(rng);
    const double half = cam.fov_y_deg / 2.0;
    if (half >= 89.0) continue;
    const MountConfig mount{unit(rng) * (89.5 - half), 1.0 + 200.0 * unit(rng)};
    const double row = unit(rng) * cam.pixels_y;
    const double angle = mount.phi_deg - half + cam.fov_y_deg / cam.pixels_y * row;
    const double oracle = mount.height_m / std::cos(rad(angle));
    CHECK(range_for_pixel_row(cam, mount, row) == doctest::Approx(oracle).epsilon(1e-12));
    const auto scale = pixel_scale_at(cam, mount, row);
    CHECK(scale.x == doctest::Approx(oracle * std::tan(rad(cam.fov_x_deg / cam.pixels_x))).epsilon(1e-12));
  }
}
