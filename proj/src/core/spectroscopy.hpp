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

// Absorption spectra for the lower atmosphere.
//
// Two backends produce an AbsorptionSpectrum: a line-by-line sum of
// pressure-broadened Lorentz lines from a 160-character transition list, and
// a precomputed two-column table. Wavenumbers are in cm^-1, absorption
// coefficients in m^-1.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace thermoscope {

/// Molecule ids as used by the transition-record format.
enum class Molecule : int {
  h2o = 1,
  co2 = 2,
  o3 = 3,
  n2o = 4,
  co = 5,
  ch4 = 6,
  o2 = 7,
  n2 = 22,
};

bool is_linear(Molecule molecule) noexcept;

struct SpectralLine {
  Molecule molecule = Molecule::h2o;
  int isotopologue = 1;
  double wavenumber_cm1 = 0.0;        // line centre at zero pressure
  double intensity_ref = 0.0;         // cm^-1/(molecule cm^-2) at 296 K
  double air_broadening = 0.0;        // HWHM, cm^-1/atm
  double self_broadening = 0.0;       // HWHM, cm^-1/atm
  double lower_state_energy_cm1 = 0.0;
  double temperature_exponent = 0.0;  // of the air-broadened width
  double pressure_shift = 0.0;        // cm^-1/atm
};

/// Parses fixed-width 160-character transition records. Blank lines are
/// skipped; anything else malformed throws a parse error carrying its line.
std::vector<SpectralLine> parse_line_list(std::istream& in);
std::vector<SpectralLine> parse_line_list(std::string_view text);
std::vector<SpectralLine> load_line_list(const std::filesystem::path& path);

/// Serialises one record in the same fixed-width layout (160 characters).
std::string format_line_record(const SpectralLine& line);

struct GasConditions {
  double air_k = 288.15;
  double pressure_kpa = 101.325;
  double rh_pct = 50.0;
};

void validate(const GasConditions& conditions);

/// Saturation vapour pressure over water (Arden Buck), kPa.
double saturation_vapour_pressure_kpa(double air_k);

/// Water-vapour mole fraction implied by relative humidity.
double water_mole_fraction(const GasConditions& conditions);

/// Mole fraction of `molecule` in humid air: N2 and O2 scale with the dry
/// fraction, the remainder is inert. Other molecules are not modelled (0).
double mole_fraction(Molecule molecule, const GasConditions& conditions);

/// Total molecular number density from the ideal gas law, m^-3.
double number_density_per_m3(const GasConditions& conditions);

/// Line intensity scaled from 296 K to `air_k`.
double line_intensity_at(const SpectralLine& line, double air_k);

/// Lorentz half width at half maximum for the given conditions, cm^-1.
double lorentz_half_width(const SpectralLine& line, const GasConditions& conditions);

struct WavenumberGrid {
  double start_cm1 = 714.0;
  double end_cm1 = 1250.0;
  double step_cm1 = 0.01;

  std::size_t size() const;
  double at(std::size_t i) const { return start_cm1 + step_cm1 * static_cast<double>(i); }
};

struct AbsorptionSpectrum {
  std::vector<double> wavenumber_cm1;
  std::vector<double> kappa_per_m;

  std::size_t size() const noexcept { return wavenumber_cm1.size(); }
};

/// Checks the grid is strictly increasing and uniform, kappa is non-negative
/// and the grid covers the 8-14 um band. Throws a domain error on failure.
void validate(const AbsorptionSpectrum& spectrum);

struct LineByLineOptions {
  /// Lines contribute only within this distance of their centre.
  double wing_cutoff_cm1 = 25.0;
};

AbsorptionSpectrum absorption_spectrum(std::span<const SpectralLine> lines,
                                       const GasConditions& conditions,
                                       const WavenumberGrid& grid = {},
                                       const LineByLineOptions& options = {});

/// Flat spectrum; the grey-gas case.
AbsorptionSpectrum gray_spectrum(double kappa_per_m, const WavenumberGrid& grid);

/// Averages kappa into bins of `step_cm1` starting at the first grid point.
AbsorptionSpectrum resample_mean(const AbsorptionSpectrum& spectrum, double step_cm1);

inline constexpr std::string_view kSpectrumTableHeader = "wavenumber_cm-1,kappa_per_m";

AbsorptionSpectrum parse_spectrum_table(std::istream& in);
AbsorptionSpectrum load_spectrum_table(const std::filesystem::path& path);
void write_spectrum_table(std::ostream& out, const AbsorptionSpectrum& spectrum);

}  // namespace thermoscope
