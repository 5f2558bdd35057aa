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

#include "fog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <string>

#include "error.hpp"
#include "radiative_transfer.hpp"
#include "units.hpp"

namespace thermoscope {

RefractiveIndexTable::RefractiveIndexTable(std::vector<double> wavelength_um,
                                           std::vector<double> index)
    : wavelength_um_(std::move(wavelength_um)), index_(std::move(index)) {
  require(wavelength_um_.size() == index_.size() && !index_.empty(),
          "refractive index table needs matching, non-empty columns");
  for (std::size_t i = 0; i < index_.size(); ++i) {
    require(wavelength_um_[i] > 0.0 && index_[i] > 0.0, "refractive index entries must be positive");
    if (i > 0) require(wavelength_um_[i] > wavelength_um_[i - 1], "wavelengths must increase");
  }
}

const RefractiveIndexTable& RefractiveIndexTable::water() {
  // Real part for liquid water near 25 C, after Hale & Querry (1973).
  static const RefractiveIndexTable table(
      {0.5, 0.6, 0.7, 0.75, 0.8, 0.9, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 5.0, 6.0,
       7.0, 8.0, 9.0, 10.0, 11.0, 12.0, 13.0, 14.0, 15.0},
      {1.335, 1.332, 1.331, 1.330, 1.329, 1.328, 1.327, 1.321, 1.306, 1.261, 1.371, 1.422,
       1.351, 1.325, 1.265, 1.317, 1.291, 1.262, 1.218, 1.153, 1.111, 1.123, 1.146, 1.177});
  return table;
}

double RefractiveIndexTable::at(double wavelength_m) const {
  const double um = wavelength_m * 1.0e6;
  if (um <= wavelength_um_.front()) return index_.front();
  if (um >= wavelength_um_.back()) return index_.back();
  const auto it = std::upper_bound(wavelength_um_.begin(), wavelength_um_.end(), um);
  const auto i = static_cast<std::size_t>(it - wavelength_um_.begin());
  const double t = (um - wavelength_um_[i - 1]) / (wavelength_um_[i] - wavelength_um_[i - 1]);
  return index_[i - 1] + t * (index_[i] - index_[i - 1]);
}

RefractiveIndexTable parse_refractive_index_table(std::istream& in) {
  std::string text;
  std::size_t line_no = 1;
  if (!std::getline(in, text)) throw Error(ErrorCode::load, "refractive index table is empty");
  if (!text.empty() && text.back() == '\r') text.pop_back();
  if (text != kRefractiveIndexHeader) {
    throw Error(ErrorCode::load, "bad header, expected '" + std::string(kRefractiveIndexHeader) + "'",
                line_no);
  }
  std::vector<double> wavelengths;
  std::vector<double> indices;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.empty()) continue;
    const auto comma = text.find(',');
    double w = 0.0;
    double n = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    if (comma == std::string::npos || std::from_chars(begin, begin + comma, w).ptr != begin + comma ||
        std::from_chars(begin + comma + 1, end, n).ptr != end) {
      throw Error(ErrorCode::load, "expected two numbers", line_no);
    }
    wavelengths.push_back(w);
    indices.push_back(n);
  }
  try {
    return RefractiveIndexTable(std::move(wavelengths), std::move(indices));
  } catch (const Error& e) {
    throw Error(ErrorCode::load, e.what());
  }
}

RefractiveIndexTable load_refractive_index_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open refractive index table " + path.string());
  return parse_refractive_index_table(in);
}

namespace {

double rayleigh_cross_section(double d, double wavelength, double n) {
  const double n2 = n * n;
  const double k = (n2 - 1.0) / (n2 + 2.0);
  const double pi5 = std::pow(std::numbers::pi, 5);
  return 2.0 * pi5 / 3.0 * std::pow(d, 6) / std::pow(wavelength, 4) * k * k;
}

double geometric_cross_section(double d) {
  return 2.0 * std::numbers::pi * (d / 2.0) * (d / 2.0);
}

}  // namespace

double fog_cross_section(double droplet_diameter_m, double wavelength_m, double refractive_index) {
  require(droplet_diameter_m >= 0.0, "droplet diameter must be non-negative");
  require(wavelength_m > 0.0, "wavelength must be positive");
  require(refractive_index > 0.0, "refractive index must be positive");
  const double d = droplet_diameter_m;
  if (d == 0.0) return 0.0;
  if (wavelength_m >= 3.0 * d) return rayleigh_cross_section(d, wavelength_m, refractive_index);
  if (wavelength_m <= 2.0 * d) return geometric_cross_section(d);
  const double t = (wavelength_m - 2.0 * d) / d;
  const double geometric = geometric_cross_section(d);
  // The Rayleigh end is evaluated at the regime boundary so the blend is
  // continuous at both ends.
  const double rayleigh = rayleigh_cross_section(d, 3.0 * d, refractive_index);
  return geometric + t * (rayleigh - geometric);
}

double fog_transmission(double number_density_per_m3, double cross_section_m2, double distance_m) {
  require(number_density_per_m3 >= 0.0 && cross_section_m2 >= 0.0 && distance_m >= 0.0,
          "fog parameters must be non-negative");
  return std::exp(-number_density_per_m3 * cross_section_m2 * distance_m);
}

double fog_half_distance(double number_density_per_m3, double cross_section_m2) {
  require(number_density_per_m3 > 0.0 && cross_section_m2 > 0.0,
          "half distance needs positive density and cross section");
  return std::numbers::ln2 / (number_density_per_m3 * cross_section_m2);
}

void validate(const FogConditions& fog) {
  require(fog.droplet_diameter_m > 0.0, "droplet diameter must be positive");
  require(fog.number_density_per_m3 >= 0.0, "droplet density must be non-negative");
  require(fog.depth_m >= 0.0, "fog depth must be non-negative");
  require(fog.air_k > 0.0, "fog air temperature must be positive");
}

FogTemperatureChange fog_temperature_change(double source_k, const FogConditions& fog,
                                            const AbsorptionSpectrum& water_spectrum,
                                            const RefractiveIndexTable& refractive_index) {
  validate(fog);
  require(source_k > 0.0, "source temperature must be positive");
  FogTemperatureChange change;
  if (fog.depth_m == 0.0) return change;

  const BandNodes nodes = band_nodes(water_spectrum);
  const double s = fog.depth_m;
  const double absorbed_only = band_average(nodes, source_k, [&](std::size_t i) {
    return spectral_fraction(nodes.wavenumber_cm1[i], nodes.kappa_per_m[i], s, source_k, fog.air_k);
  });
  const double with_scattering = band_average(nodes, source_k, [&](std::size_t i) {
    const double wavelength_m = 1.0e-2 / nodes.wavenumber_cm1[i];
    const double sigma = fog_cross_section(fog.droplet_diameter_m, wavelength_m,
                                           refractive_index.at(wavelength_m));
    return spectral_fraction(nodes.wavenumber_cm1[i], nodes.kappa_per_m[i], s, source_k, fog.air_k) *
           fog_transmission(fog.number_density_per_m3, sigma, s);
  });

  change.absorption_emission_k = observed_temperature(source_k, absorbed_only) - source_k;
  change.total_k = observed_temperature(source_k, with_scattering) - source_k;
  change.scattering_k = change.total_k - change.absorption_emission_k;
  return change;
}

double segment_temperature_change(double source_k, const PathSegment& segment) {
  require(segment.length_m >= 0.0, "segment length must be non-negative");
  if (const auto* gas = std::get_if<GasMedium>(&segment.medium)) {
    require(gas->spectrum != nullptr, "gas segment has no spectrum");
    validate(gas->conditions);
    const double fraction =
        band_transmission(*gas->spectrum, source_k, gas->conditions.air_k, segment.length_m);
    return observed_temperature(source_k, fraction) - source_k;
  }
  const auto& fog = std::get<FogMedium>(segment.medium);
  require(fog.water_spectrum != nullptr, "fog segment has no water spectrum");
  FogConditions conditions = fog.fog;
  conditions.depth_m = segment.length_m;
  return fog_temperature_change(source_k, conditions, *fog.water_spectrum).total_k;
}

double compose_temperature_changes(double source_k, std::span<const double> changes_k) {
  double total = 0.0;
  for (const double c : changes_k) total += c;
  return source_k + total;
}

double compose_path(double source_k, std::span<const PathSegment> segments) {
  std::vector<double> changes;
  changes.reserve(segments.size());
  for (const auto& segment : segments) changes.push_back(segment_temperature_change(source_k, segment));
  return compose_temperature_changes(source_k, changes);
}

}  // namespace thermoscope
