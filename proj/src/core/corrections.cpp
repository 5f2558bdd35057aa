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

#include "corrections.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "error.hpp"
#include "radiative_transfer.hpp"
#include "text.hpp"
#include "units.hpp"

namespace thermoscope {

static_assert(std::endian::native == std::endian::little, "raster writer assumes a little-endian host");

std::string_view grid_kind_name(GridKind kind) noexcept {
  switch (kind) {
    case GridKind::range_m: return "range_m";
    case GridKind::pixel_scale_m: return "pixel_scale_m";
    case GridKind::t_obs_k: return "t_obs_k";
  }
  return "";
}

GridKind parse_grid_kind(std::string_view name) {
  for (const auto kind : {GridKind::range_m, GridKind::pixel_scale_m, GridKind::t_obs_k}) {
    if (grid_kind_name(kind) == name) return kind;
  }
  throw Error(ErrorCode::parse, "unknown grid kind '" + std::string(name) + "'");
}

double ray_range(const MountConfig& mount, double alpha_x_deg, double alpha_y_deg) {
  const double phi = radians(mount.phi_deg);
  const double tx = std::tan(radians(alpha_x_deg));
  const double ty = std::tan(radians(alpha_y_deg));
  const double down = (std::cos(phi) - ty * std::sin(phi)) / std::sqrt(tx * tx + ty * ty + 1.0);
  if (!(down > 0.0)) throw Error(ErrorCode::horizon, "ray does not reach the ground");
  return mount.height_m / down;
}

AxisPair pixel_angles(const CameraModel& camera, int col, int row) {
  return {(col - (camera.pixels_x - 1) / 2.0) * angular_pixel_scale(camera, Axis::x),
          (row - (camera.pixels_y - 1) / 2.0) * angular_pixel_scale(camera, Axis::y)};
}

CorrectionGrid range_grid(const CameraModel& camera, const MountConfig& mount) {
  validate(camera);
  validate(mount);
  CorrectionGrid grid;
  grid.kind = GridKind::range_m;
  grid.width = camera.pixels_x;
  grid.height = camera.pixels_y;
  grid.metadata.camera = camera;
  grid.metadata.mount = mount;
  grid.values.resize(static_cast<std::size_t>(grid.width) * grid.height);

  // The far corner pixels are the first to leave the ground.
  const auto corner = pixel_angles(camera, 0, camera.pixels_y - 1);
  try {
    ray_range(mount, corner.x, corner.y);
  } catch (const Error&) {
    throw Error(ErrorCode::horizon, "pixel (col 0, row " + std::to_string(camera.pixels_y - 1) +
                                        ") looks at or above the horizon");
  }
  for (int row = 0; row < grid.height; ++row) {
    double* out = grid.values.data() + static_cast<std::size_t>(row) * grid.width;
    for (int col = 0; col < grid.width; ++col) {
      // Mirror symmetry in x: reuse the left half.
      const int mirror = grid.width - 1 - col;
      if (mirror < col) {
        out[col] = out[mirror];
        continue;
      }
      const auto a = pixel_angles(camera, col, row);
      out[col] = ray_range(mount, a.x, a.y);
    }
  }
  return grid;
}

CorrectionGrid pixel_scale_grid(const CameraModel& camera, const MountConfig& mount, Axis axis) {
  require(axis != Axis::coarser, "pixel scale grid axis must be x or y");
  auto grid = range_grid(camera, mount);
  grid.kind = GridKind::pixel_scale_m;
  grid.metadata.axis = axis;
  const double scale = std::tan(radians(angular_pixel_scale(camera, axis)));
  for (auto& v : grid.values) v *= scale;
  return grid;
}

CorrectionGrid temperature_grid(const CameraModel& camera, const MountConfig& mount, double source_k,
                                double medium_k, const AbsorptionSpectrum& spectrum) {
  auto grid = range_grid(camera, mount);
  const BandTransmission transmission(spectrum, source_k, medium_k);
  grid.kind = GridKind::t_obs_k;
  grid.metadata.source_k = source_k;
  grid.metadata.medium_k = medium_k;
  for (auto& v : grid.values) v = observed_temperature(source_k, transmission(v));
  return grid;
}

void write_grid_csv(std::ostream& out, const CorrectionGrid& grid) {
  out << "kind,width,height\n" << grid_kind_name(grid.kind) << ',' << grid.width << ',' << grid.height << '\n';
  for (int row = 0; row < grid.height; ++row) {
    for (int col = 0; col < grid.width; ++col) {
      if (col > 0) out << ',';
      out << text::format_double(grid.at(col, row));
    }
    out << '\n';
  }
}

namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                         static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(bytes, 4);
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

}  // namespace

void write_grid_f32(std::ostream& out, const CorrectionGrid& grid) {
  out.write(kRasterMagic, 4);
  put_u32(out, static_cast<std::uint32_t>(grid.width));
  put_u32(out, static_cast<std::uint32_t>(grid.height));
  put_u32(out, static_cast<std::uint32_t>(grid.kind));
  std::vector<float> values(grid.values.begin(), grid.values.end());
  out.write(reinterpret_cast<const char*>(values.data()), static_cast<std::streamsize>(values.size() * sizeof(float)));
}

void export_raster(const CorrectionGrid& grid, const std::filesystem::path& path, RasterFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path.string() + " for writing");
  if (format == RasterFormat::csv) {
    write_grid_csv(out, grid);
  } else {
    write_grid_f32(out, grid);
  }
  out.flush();
  if (!out) throw Error(ErrorCode::io, "write failed for " + path.string());
}

F32Raster read_f32_raster(std::istream& in) {
  unsigned char header[kRasterHeaderBytes];
  if (!in.read(reinterpret_cast<char*>(header), sizeof header)) {
    throw Error(ErrorCode::load, "raster shorter than its 16-byte header");
  }
  if (std::memcmp(header, kRasterMagic, 4) != 0) throw Error(ErrorCode::load, "bad raster magic");
  F32Raster raster;
  const auto w = get_u32(header + 4);
  const auto h = get_u32(header + 8);
  const auto kind = get_u32(header + 12);
  if (w == 0 || h == 0 || w > (1u << 16) || h > (1u << 16)) throw Error(ErrorCode::load, "bad raster dimensions");
  if (kind > 2) throw Error(ErrorCode::load, "unknown raster kind code " + std::to_string(kind));
  raster.width = static_cast<int>(w);
  raster.height = static_cast<int>(h);
  raster.kind = static_cast<GridKind>(kind);
  raster.values.resize(static_cast<std::size_t>(w) * h);
  const auto bytes = static_cast<std::streamsize>(raster.values.size() * sizeof(float));
  if (!in.read(reinterpret_cast<char*>(raster.values.data()), bytes)) {
    throw Error(ErrorCode::load, "raster body truncated");
  }
  return raster;
}

F32Raster read_f32_raster(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  try {
    return read_f32_raster(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

}  // namespace thermoscope
