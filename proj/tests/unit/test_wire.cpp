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

#include "error.hpp"
#include "request_vectors.hpp"
#include "service.hpp"
#include "test_support.hpp"
#include "wire.hpp"

using namespace thermoscope;
using wire::Json;

namespace {

// Numeric leaves (and arrays of numbers) must sit under a unit-suffixed key.
void walk(const Json& j, const std::string& where, std::vector<std::string>& offenders) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const bool numeric = value.is_number() ||
                           (value.is_array() && !value.empty() &&
                            std::all_of(value.begin(), value.end(), [](const Json& x) { return x.is_number(); }));
      if (numeric && !wire::has_unit_suffix(key)) offenders.push_back(where + "." + key);
      walk(value, where + "." + key, offenders);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) walk(j[i], where + "[" + std::to_string(i) + "]", offenders);
  }
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += s + " ";
  return out;
}

}  // namespace

TEST_CASE("unit suffixes") {
  CHECK(wire::has_unit_suffix("height_m"));
  CHECK(wire::has_unit_suffix("kappa_per_m"));
  CHECK(wire::has_unit_suffix("size_bytes"));
  CHECK_FALSE(wire::has_unit_suffix("_m"));
  CHECK_FALSE(wire::has_unit_suffix("height"));
  CHECK_FALSE(wire::has_unit_suffix("kind"));
}

TEST_CASE("schema walk flags bare numeric keys") {
  std::vector<std::string> offenders;
  walk(Json{{"ok_m", 1}, {"inner", {{"height", 2}}}, {"list", {{{"values", {1, 2}}}}}, {"name", "x"}}, "r", offenders);
  CHECK(offenders == std::vector<std::string>{"r.inner.height", "r.list[0].values"});
}

TEST_CASE("body parsing") {
  CHECK(wire::parse_body("").empty());
  CHECK(wire::parse_body(" \n").is_object());
  CHECK(wire::parse_body(R"({"a_m": 1})").at("a_m") == 1);
  CHECK_ERROR_CODE(wire::parse_body("{"), ErrorCode::bad_request);
  CHECK_ERROR_CODE(wire::parse_body("[1, 2]"), ErrorCode::bad_request);
  CHECK_ERROR_CODE(wire::parse_body("3"), ErrorCode::bad_request);
}

TEST_CASE("field accessors") {
  const Json j = {{"x_m", 2.5}, {"n_px", 4}, {"f_px", 4.0}, {"g_px", 4.5}, {"s", "text"}, {"b", true}};
  CHECK(wire::number(j, "x_m") == 2.5);
  CHECK(wire::number(j, "n_px") == 4.0);
  CHECK(wire::number_or(j, "missing_m", 7.0) == 7.0);
  CHECK(wire::integer(j, "n_px") == 4);
  CHECK(wire::integer(j, "f_px") == 4);
  CHECK(wire::integer_or(j, "missing_px", 3) == 3);
  CHECK(wire::string_or(j, "s", "") == "text");
  CHECK(wire::boolean_or(j, "b", false));
  CHECK_ERROR_CODE(wire::number(j, "s"), ErrorCode::bad_request);
  CHECK_ERROR_CODE(wire::number(j, "missing_m"), ErrorCode::bad_request);
  CHECK_ERROR_CODE(wire::integer(j, "g_px"), ErrorCode::bad_request);
  CHECK_ERROR_CODE(wire::string_or(j, "x_m", ""), ErrorCode::bad_request);
  CHECK_ERROR_CODE(wire::boolean_or(j, "s", false), ErrorCode::bad_request);
  CHECK_ERROR_CODE(wire::member(Json::array(), "x"), ErrorCode::bad_request);
}

TEST_CASE("camera references") {
  const auto tau = tau640_camera();
  CHECK(wire::camera_from_json("tau640").pixels_x == 640);
  CHECK(wire::camera_from_json({{"preset", "tau640"}}).fov_y_deg == 37.0);
  const auto text = wire::camera_from_json({{"config_text", "pixels_x=9\npixels_y=7\nfov_x_deg=30\nfov_y_deg=24\n"}});
  CHECK(text.pixels_y == 7);
  const auto round = wire::camera_from_json(wire::to_json(tau));
  CHECK(round.pixels_x == tau.pixels_x);
  CHECK(round.pixels_y == tau.pixels_y);
  CHECK(round.fov_x_deg == tau.fov_x_deg);
  CHECK(round.relative_sensitivity_k == tau.relative_sensitivity_k);
  std::string asked;
  const auto file = wire::camera_from_json({{"config_file", "tau640.cfg"}}, [&](const std::string& name) {
    asked = name;
    return testing::data_dir() / "cameras" / name;
  });
  CHECK(asked == "tau640.cfg");
  CHECK(file.fov_x_deg == 45.0);
  CHECK_ERROR_CODE(wire::camera_from_json("nope"), ErrorCode::not_found);
  CHECK_ERROR_CODE(wire::camera_from_json(3), ErrorCode::bad_request);
  CHECK_ERROR_CODE(wire::camera_from_json({{"pixels_x_px", 0}, {"pixels_y_px", 1}, {"fov_x_deg", 1}, {"fov_y_deg", 1}}),
                   ErrorCode::domain);
}

TEST_CASE("mission spec round trip") {
  const auto body = wire::parse_body(testing::read_file(testing::data_dir() / "missions" / "rabbit.json"));
  const auto spec = wire::spec_from_json(body.at("spec"));
  const auto j = wire::to_json(spec);
  const auto again = wire::spec_from_json(j);
  CHECK(wire::to_json(again) == j);
  CHECK(again.animal.length_min_m == 0.25);
  CHECK(again.vegetation->cover_fraction == 0.75);
  CHECK(again.angled->center_range_m == 20.0);
  CHECK(again.constraints.min_pixels == 10);
  CHECK(again.desired_doy == 268);

  Json minimal = {{"site", {{"latitude_deg", 0}, {"longitude_deg", 0}}},
                  {"animal", {{"length_min_m", 0.5}, {"temp_min_k", 300}}},
                  {"desired_date_doy", 10}};
  const auto m = wire::spec_from_json(minimal);
  CHECK(m.animal.length_max_m == 0.5);
  CHECK(m.animal.temp_max_k == 300.0);
  CHECK(m.camera.pixels_x == 640);
  CHECK_FALSE(m.vegetation.has_value());
  CHECK(wire::to_json(m).at("vegetation").is_null());
  minimal["desired_date_doy"] = 0;
  CHECK_ERROR_CODE(wire::spec_from_json(minimal), ErrorCode::domain);
  CHECK_ERROR_CODE(wire::spec_from_json(Json::array()), ErrorCode::bad_request);
}

TEST_CASE("error body shape") {
  const auto e = wire::error_body("horizon", "too steep");
  CHECK(e == Json{{"error", {{"code", "horizon"}, {"message", "too steep"}}}});
}

TEST_CASE("every request and response uses unit-suffixed numeric keys") {
  testing::TempDir data;
  testing::TempDir store;
  testing::make_test_data_dir(data.path(), testing::data_dir());
  ServiceConfig config;
  config.data_dir = data.path();
  config.store_dir = store.path();
  Service service(config);
  const auto vectors = testing::request_vectors(testing::data_dir() / "missions" / "rabbit.json");
  for (const auto& v : vectors) {
    CAPTURE(v.name);
    std::vector<std::string> offenders;
    walk(v.body, "request", offenders);
    const auto r = service.handle(v.method, v.path, v.body.dump());
    CHECK(r.status == v.status);
    const auto response = Json::parse(r.body);
    walk(response, "response", offenders);
    INFO(join(offenders));
    CHECK(offenders.empty());
  }
  std::vector<std::string> offenders;
  walk(Json::parse(service.handle("GET", "/v1/health", "").body), "health", offenders);
  auto saved = testing::request_vectors(testing::data_dir() / "missions" / "rabbit.json").back().body;
  saved["save"] = true;
  const auto id = Json::parse(service.handle("POST", "/v1/plan", saved.dump()).body).at("id").get<std::string>();
  walk(Json::parse(service.handle("GET", "/v1/plans/" + id, "").body), "stored", offenders);
  walk(Json::parse(service.handle("GET", "/v1/plans", "").body), "list", offenders);
  const Json big = {{"mount", {{"height_m", 50.0}}}};
  walk(Json::parse(service.handle("POST", "/v1/corrections", big.dump()).body), "artifact", offenders);
  const Json path = {{"source_k", 298.15},
                     {"segments", {{{"kind", "gas"}, {"length_m", 100.0}}, {{"kind", "delta"}, {"delta_k", 0.5}}}}};
  walk(Json::parse(service.handle("POST", "/v1/atmosphere/path", path.dump()).body), "path", offenders);
  const Json scene = {{"width_px", 4}, {"height_px", 4}, {"background_k", 280.0},
                      {"discs", {{{"centre_x_px", 2.0}, {"centre_y_px", 2.0}, {"diameter_px", 2.0}, {"t_k", 300.0}}}}};
  walk(Json::parse(service.handle("POST", "/v1/blend/scene", scene.dump()).body), "scene", offenders);
  INFO(join(offenders));
    CHECK(offenders.empty());
}
