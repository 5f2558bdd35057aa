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

#include "spectroscopy.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "error.hpp"
#include "text.hpp"
#include "units.hpp"

namespace thermoscope {

bool is_linear(Molecule molecule) noexcept {
  switch (molecule) {
    case Molecule::co2:
    case Molecule::n2o:
    case Molecule::co:
    case Molecule::o2:
    case Molecule::n2: return true;
    case Molecule::h2o:
    case Molecule::o3:
    case Molecule::ch4: return false;
  }
  return false;
}

namespace {

constexpr std::size_t kRecordLength = 160;

using text::to_double;
using text::trim;

// Fixed-width field by 1-based inclusive column range.
double field(std::string_view record, std::size_t first, std::size_t last, const char* name,
             std::size_t line_no) {
  double value = 0.0;
  if (!to_double(record.substr(first - 1, last - first + 1), value)) {
    throw Error(ErrorCode::parse,
                std::string("non-numeric ") + name + " field '" +
                    std::string(record.substr(first - 1, last - first + 1)) + "'",
                line_no);
  }
  return value;
}

Molecule molecule_from_id(int id, std::size_t line_no) {
  switch (id) {
    case 1: return Molecule::h2o;
    case 2: return Molecule::co2;
    case 3: return Molecule::o3;
    case 4: return Molecule::n2o;
    case 5: return Molecule::co;
    case 6: return Molecule::ch4;
    case 7: return Molecule::o2;
    case 22: return Molecule::n2;
    default: throw Error(ErrorCode::parse, "unknown molecule id " + std::to_string(id), line_no);
  }
}

int isotopologue_from_char(char c, std::size_t line_no) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c == '0') return 10;
  if (c >= 'A' && c <= 'Z') return 11 + (c - 'A');
  throw Error(ErrorCode::parse, std::string("bad isotopologue '") + c + "'", line_no);
}

SpectralLine parse_record(std::string_view record, std::size_t line_no) {
  if (record.size() != kRecordLength) {
    throw Error(ErrorCode::parse,
                "record has " + std::to_string(record.size()) + " characters, expected 160",
                line_no);
  }
  const double mol = field(record, 1, 2, "molecule", line_no);
  if (mol != std::floor(mol)) throw Error(ErrorCode::parse, "molecule id must be an integer", line_no);

  SpectralLine line;
  line.molecule = molecule_from_id(static_cast<int>(mol), line_no);
  line.isotopologue = isotopologue_from_char(record[2], line_no);
  line.wavenumber_cm1 = field(record, 4, 15, "wavenumber", line_no);
  line.intensity_ref = field(record, 16, 25, "intensity", line_no);
  line.air_broadening = field(record, 36, 40, "air-broadened width", line_no);
  line.self_broadening = field(record, 41, 45, "self-broadened width", line_no);
  line.lower_state_energy_cm1 = field(record, 46, 55, "lower-state energy", line_no);
  line.temperature_exponent = field(record, 56, 59, "temperature exponent", line_no);
  line.pressure_shift = field(record, 60, 67, "pressure shift", line_no);

  if (line.wavenumber_cm1 <= 0.0) throw Error(ErrorCode::parse, "wavenumber must be positive", line_no);
  if (line.intensity_ref < 0.0) throw Error(ErrorCode::parse, "intensity must be >= 0", line_no);
  if (line.air_broadening <= 0.0 || line.self_broadening <= 0.0) {
    throw Error(ErrorCode::parse, "broadening widths must be positive", line_no);
  }
  return line;
}

// Fixed-point field of exactly `width` characters, dropping the leading zero
// the way Fortran F-format does when space is short (".0700", "-.001234").
std::string fixed(double value, int width, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (static_cast<int>(s.size()) > width) {
    if (s.rfind("0.", 0) == 0) s.erase(0, 1);
    else if (s.rfind("-0.", 0) == 0) s.erase(1, 1);
  }
  if (static_cast<int>(s.size()) > width) throw_domain("value " + s + " does not fit its field");
  return std::string(width - s.size(), ' ') + s;
}

std::string scientific(double value, int width, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%*.*E", width, decimals, value);
  std::string s(buf);
  if (static_cast<int>(s.size()) > width) throw_domain("value " + s + " does not fit its field");
  return s;
}

}  // namespace

std::vector<SpectralLine> parse_line_list(std::istream& in) {
  std::vector<SpectralLine> lines;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    std::string_view record(text);
    if (!record.empty() && record.back() == '\r') record.remove_suffix(1);
    if (trim(record).empty()) continue;
    lines.push_back(parse_record(record, line_no));
  }
  return lines;
}

std::vector<SpectralLine> parse_line_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_line_list(in);
}

std::vector<SpectralLine> load_line_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open line list " + path.string());
  return parse_line_list(in);
}

std::string format_line_record(const SpectralLine& line) {
  const int mol = static_cast<int>(line.molecule);
  const int iso = line.isotopologue;
  char iso_char = '1';
  if (iso >= 1 && iso <= 9) iso_char = static_cast<char>('0' + iso);
  else if (iso == 10) iso_char = '0';
  else if (iso >= 11 && iso <= 36) iso_char = static_cast<char>('A' + iso - 11);
  else throw_domain("isotopologue out of range");

  char head[8];
  std::snprintf(head, sizeof head, "%2d%c", mol, iso_char);
  std::string record = head;
  record += fixed(line.wavenumber_cm1, 12, 6);
  record += scientific(line.intensity_ref, 10, 3);
  record += scientific(0.0, 10, 3);  // Einstein A, unused
  record += fixed(line.air_broadening, 5, 4);
  record += fixed(line.self_broadening, 5, 3);
  record += fixed(line.lower_state_energy_cm1, 10, 4);
  record += fixed(line.temperature_exponent, 4, 2);
  record += fixed(line.pressure_shift, 8, 6);
  record.resize(kRecordLength, ' ');
  return record;
}

void validate(const GasConditions& conditions) {
  require(conditions.air_k > 0.0, "air temperature must be positive");
  require(conditions.pressure_kpa > 0.0, "pressure must be positive");
  require(conditions.rh_pct >= 0.0 && conditions.rh_pct <= 100.0,
          "relative humidity must lie in [0, 100] percent");
}

double saturation_vapour_pressure_kpa(double air_k) {
  const double t = air_k - kCelsiusOffset;
  return 0.61121 * std::exp((18.678 - t / 234.5) * (t / (257.14 + t)));
}

double water_mole_fraction(const GasConditions& conditions) {
  validate(conditions);
  const double partial = conditions.rh_pct / 100.0 * saturation_vapour_pressure_kpa(conditions.air_k);
  require(partial < conditions.pressure_kpa, "water partial pressure exceeds total pressure");
  return partial / conditions.pressure_kpa;
}

double mole_fraction(Molecule molecule, const GasConditions& conditions) {
  const double water = water_mole_fraction(conditions);
  switch (molecule) {
    case Molecule::h2o: return water;
    case Molecule::n2: return 0.78 * (1.0 - water);
    case Molecule::o2: return 0.21 * (1.0 - water);
    default: return 0.0;
  }
}

double number_density_per_m3(const GasConditions& conditions) {
  validate(conditions);
  return conditions.pressure_kpa * 1.0e3 / (kBoltzmann * conditions.air_k);
}

double line_intensity_at(const SpectralLine& line, double air_k) {
  require(air_k > 0.0, "temperature must be positive");
  constexpr double t_ref = kReferenceTemperature;
  const double c2 = kSecondRadiation;
  const double partition = std::pow(t_ref / air_k, is_linear(line.molecule) ? 1.0 : 1.5);
  const double boltzmann =
      std::exp(-c2 * line.lower_state_energy_cm1 * (1.0 / air_k - 1.0 / t_ref));
  const double stimulated = -std::expm1(-c2 * line.wavenumber_cm1 / air_k) /
                            -std::expm1(-c2 * line.wavenumber_cm1 / t_ref);
  return line.intensity_ref * partition * boltzmann * stimulated;
}

double lorentz_half_width(const SpectralLine& line, const GasConditions& conditions) {
  const double p_atm = conditions.pressure_kpa / kStandardAtmosphereKpa;
  const double p_self = mole_fraction(line.molecule, conditions) * p_atm;
  return line.air_broadening * (p_atm - p_self) *
             std::pow(kReferenceTemperature / conditions.air_k, line.temperature_exponent) +
         line.self_broadening * p_self;
}

std::size_t WavenumberGrid::size() const {
  require(step_cm1 > 0.0 && end_cm1 > start_cm1, "wavenumber grid must have positive extent");
  return static_cast<std::size_t>(std::floor((end_cm1 - start_cm1) / step_cm1 + 1e-9)) + 1;
}

namespace {

void check_grid(const WavenumberGrid& grid) {
  require(grid.start_cm1 <= kBandLowCm1 + 1e-9 && grid.at(grid.size() - 1) >= kBandHighCm1 - 1e-9,
          "wavenumber grid must cover the 8-14 um band (714.29-1250 cm^-1)");
}

}  // namespace

void validate(const AbsorptionSpectrum& spectrum) {
  const auto& nu = spectrum.wavenumber_cm1;
  const auto& kappa = spectrum.kappa_per_m;
  require(nu.size() == kappa.size(), "spectrum grid and kappa lengths differ");
  require(nu.size() >= 2, "spectrum needs at least two points");
  const double step = nu[1] - nu[0];
  for (std::size_t i = 0; i < nu.size(); ++i) {
    require(std::isfinite(nu[i]) && std::isfinite(kappa[i]), "spectrum values must be finite");
    require(kappa[i] >= 0.0, "kappa must be non-negative");
    if (i > 0) {
      const double d = nu[i] - nu[i - 1];
      require(d > 0.0, "spectrum grid must be strictly increasing");
      require(std::abs(d - step) <= 1e-6 * step, "spectrum grid must be uniform");
    }
  }
  require(nu.front() <= kBandLowCm1 + 1e-9 && nu.back() >= kBandHighCm1 - 1e-9,
          "spectrum must cover the 8-14 um band (714.29-1250 cm^-1)");
}

AbsorptionSpectrum absorption_spectrum(std::span<const SpectralLine> lines,
                                       const GasConditions& conditions,
                                       const WavenumberGrid& grid,
                                       const LineByLineOptions& options) {
  validate(conditions);
  require(!lines.empty(), "line list is empty");
  require(options.wing_cutoff_cm1 > 0.0, "wing cutoff must be positive");
  check_grid(grid);

  const std::size_t n = grid.size();
  AbsorptionSpectrum spectrum;
  spectrum.wavenumber_cm1.resize(n);
  spectrum.kappa_per_m.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) spectrum.wavenumber_cm1[i] = grid.at(i);

  const double p_atm = conditions.pressure_kpa / kStandardAtmosphereKpa;
  // Number density in cm^-3 so that n S f has units of cm^-1.
  const double total_per_cm3 = number_density_per_m3(conditions) * 1.0e-6;

  for (const auto& line : lines) {
    const double x = mole_fraction(line.molecule, conditions);
    if (x <= 0.0 || line.intensity_ref <= 0.0) continue;
    const double strength = total_per_cm3 * x * line_intensity_at(line, conditions.air_k);
    const double centre = line.wavenumber_cm1 + line.pressure_shift * p_atm;
    const double gamma = lorentz_half_width(line, conditions);

    const double lo = (centre - options.wing_cutoff_cm1 - grid.start_cm1) / grid.step_cm1;
    const double hi = (centre + options.wing_cutoff_cm1 - grid.start_cm1) / grid.step_cm1;
    if (hi < 0.0 || lo > static_cast<double>(n - 1)) continue;
    const auto first = static_cast<std::size_t>(std::max(0.0, std::ceil(lo)));
    const auto last = static_cast<std::size_t>(std::min(static_cast<double>(n - 1), std::floor(hi)));

    const double scale = 100.0 * strength * gamma / std::numbers::pi;  // cm^-1 -> m^-1
    for (std::size_t i = first; i <= last; ++i) {
      const double dv = spectrum.wavenumber_cm1[i] - centre;
      spectrum.kappa_per_m[i] += scale / (dv * dv + gamma * gamma);
    }
  }
  return spectrum;
}

AbsorptionSpectrum gray_spectrum(double kappa_per_m, const WavenumberGrid& grid) {
  require(kappa_per_m >= 0.0, "kappa must be non-negative");
  check_grid(grid);
  AbsorptionSpectrum spectrum;
  const std::size_t n = grid.size();
  spectrum.wavenumber_cm1.resize(n);
  for (std::size_t i = 0; i < n; ++i) spectrum.wavenumber_cm1[i] = grid.at(i);
  spectrum.kappa_per_m.assign(n, kappa_per_m);
  return spectrum;
}

AbsorptionSpectrum resample_mean(const AbsorptionSpectrum& spectrum, double step_cm1) {
  validate(spectrum);
  require(step_cm1 > 0.0, "resample step must be positive");
  const double start = spectrum.wavenumber_cm1.front();
  const double end = spectrum.wavenumber_cm1.back();
  const auto bins = static_cast<std::size_t>(std::floor((end - start) / step_cm1 + 1e-9)) + 1;

  std::vector<double> sum(bins, 0.0);
  std::vector<std::size_t> count(bins, 0);
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double pos = (spectrum.wavenumber_cm1[i] - start) / step_cm1;
    const auto bin = static_cast<std::size_t>(std::floor(pos + 0.5));
    if (bin >= bins) continue;
    sum[bin] += spectrum.kappa_per_m[i];
    ++count[bin];
  }
  AbsorptionSpectrum out;
  for (std::size_t b = 0; b < bins; ++b) {
    if (count[b] == 0) continue;
    out.wavenumber_cm1.push_back(start + step_cm1 * static_cast<double>(b));
    out.kappa_per_m.push_back(sum[b] / static_cast<double>(count[b]));
  }
  validate(out);
  return out;
}

AbsorptionSpectrum parse_spectrum_table(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  if (!std::getline(in, text)) throw Error(ErrorCode::load, "spectrum table is empty");
  ++line_no;
  if (trim(text) != kSpectrumTableHeader) {
    throw Error(ErrorCode::load,
                "bad header, expected '" + std::string(kSpectrumTableHeader) + "'", line_no);
  }
  AbsorptionSpectrum spectrum;
  while (std::getline(in, text)) {
    ++line_no;
    const auto row = trim(text);
    if (row.empty()) continue;
    const auto comma = row.find(',');
    double nu = 0.0;
    double kappa = 0.0;
    if (comma == std::string_view::npos || !to_double(row.substr(0, comma), nu) ||
        !to_double(row.substr(comma + 1), kappa)) {
      throw Error(ErrorCode::load, "expected two numbers", line_no);
    }
    if (kappa < 0.0) throw Error(ErrorCode::load, "negative kappa", line_no);
    if (!spectrum.wavenumber_cm1.empty() && nu <= spectrum.wavenumber_cm1.back()) {
      throw Error(ErrorCode::load, "wavenumbers must be strictly increasing", line_no);
    }
    spectrum.wavenumber_cm1.push_back(nu);
    spectrum.kappa_per_m.push_back(kappa);
  }
  try {
    validate(spectrum);
  } catch (const Error& e) {
    throw Error(ErrorCode::load, e.what());
  }
  return spectrum;
}

AbsorptionSpectrum load_spectrum_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open spectrum table " + path.string());
  try {
    return parse_spectrum_table(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_spectrum_table(std::ostream& out, const AbsorptionSpectrum& spectrum) {
  out << kSpectrumTableHeader << '\n';
  char buf[64];
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.4f,%.9g\n", spectrum.wavenumber_cm1[i], spectrum.kappa_per_m[i]);
    out << buf;
  }
}

}  // namespace thermoscope
