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

#pragma once

#include <numbers>

namespace thermoscope {

inline constexpr double kCelsiusOffset = 273.15;

inline constexpr double kPlanck = 6.62607015e-34;         // J s
inline constexpr double kBoltzmann = 1.380649e-23;        // J/K
inline constexpr double kSpeedOfLight = 2.99792458e8;     // m/s
inline constexpr double kStefanBoltzmann = 5.670374419e-8;  // W m^-2 K^-4

/// Second radiation constant h*c/k in cm K, for wavenumbers in cm^-1.
inline constexpr double kSecondRadiation = 100.0 * kPlanck * kSpeedOfLight / kBoltzmann;

inline constexpr double kStandardAtmosphereKpa = 101.325;
inline constexpr double kReferenceTemperature = 296.0;  // line-list reference, K

/// The thermal-infrared band, 8-14 um, in wavenumbers.
inline constexpr double kBandLowCm1 = 1.0e4 / 14.0;
inline constexpr double kBandHighCm1 = 1.0e4 / 8.0;

constexpr double radians(double degrees) { return degrees * std::numbers::pi / 180.0; }
constexpr double degrees(double radians) { return radians * 180.0 / std::numbers::pi; }

constexpr double celsius_to_kelvin(double c) { return c + kCelsiusOffset; }
constexpr double kelvin_to_celsius(double k) { return k - kCelsiusOffset; }

}  // namespace thermoscope
