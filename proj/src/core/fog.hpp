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

// Fog droplets: scattering cross sections, Beer-Lambert attenuation and the
// temperature change fog causes, plus additive composition of path segments.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "spectroscopy.hpp"

namespace thermoscope {

/// Real refractive index against wavelength, linearly interpolated and
/// clamped at the table ends. Wavelengths in micrometres.
class RefractiveIndexTable {
 public:
  RefractiveIndexTable(std::vector<double> wavelength_um, std::vector<double> index);

  /// Bundled approximate table for liquid water, 0.5-15 um.
  static const RefractiveIndexTable& water();

  double at(double wavelength_m) const;

  std::span<const double> wavelength_um() const { return wavelength_um_; }
  std::span<const double> index() const { return index_; }

 private:
  std::vector<double> wavelength_um_;
  std::vector<double> index_;
};

inline constexpr std::string_view kRefractiveIndexHeader = "wavelength_um,n_real";

RefractiveIndexTable parse_refractive_index_table(std::istream& in);
RefractiveIndexTable load_refractive_index_table(const std::filesystem::path& path);

/// Extinction cross section of one droplet, m^2. Rayleigh for
/// wavelength >= 3d, geometric optics (efficiency 2) for wavelength <= 2d,
/// linear blend in between.
double fog_cross_section(double droplet_diameter_m, double wavelength_m, double refractive_index);

/// I/I0 = exp(-N sigma S).
double fog_transmission(double number_density_per_m3, double cross_section_m2, double distance_m);

/// Distance at which half the light is scattered out.
double fog_half_distance(double number_density_per_m3, double cross_section_m2);

struct FogConditions {
  double droplet_diameter_m = 1.0e-6;
  double number_density_per_m3 = 1.0e8;
  double depth_m = 0.0;
  double air_k = 283.15;
};

void validate(const FogConditions& fog);

struct FogTemperatureChange {
  double absorption_emission_k = 0.0;  // water vapour alone
  double scattering_k = 0.0;           // extra change once droplet scattering is applied
  double total_k = 0.0;
};

/// Change in observed temperature after viewing a source through the whole
/// fog depth. `water_spectrum` is saturated water vapour at the fog's air
/// temperature.
FogTemperatureChange fog_temperature_change(
    double source_k, const FogConditions& fog, const AbsorptionSpectrum& water_spectrum,
    const RefractiveIndexTable& refractive_index = RefractiveIndexTable::water());

struct GasMedium {
  GasConditions conditions;
  std::shared_ptr<const AbsorptionSpectrum> spectrum;
};

struct FogMedium {
  FogConditions fog;  // depth is taken from the segment length
  std::shared_ptr<const AbsorptionSpectrum> water_spectrum;
};

struct PathSegment {
  std::variant<GasMedium, FogMedium> medium;
  double length_m = 0.0;
};

/// Temperature change contributed by one segment viewed on its own.
double segment_temperature_change(double source_k, const PathSegment& segment);

/// T_s plus the sum of independent per-segment changes.
double compose_temperature_changes(double source_k, std::span<const double> changes_k);

/// Observed temperature through segments ordered source to camera. Each
/// segment's change is computed against the true source temperature and the
/// changes are summed.
double compose_path(double source_k, std::span<const PathSegment> segments);

}  // namespace thermoscope
