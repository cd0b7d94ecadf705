// Copyright 2026 the thzprop authors
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

// Deterministic path-attenuation models: free-space spreading, rain
// attenuation per ITU-R P.838-3 (specific attenuation) integrated either
// linearly (ITU) or with the Crane global path model, and cloud/fog
// attenuation per the ITU-R P.840 double-Debye water permittivity model.

#ifndef THZPROP_PROPAGATION_HPP
#define THZPROP_PROPAGATION_HPP

#include "thzprop/units.hpp"

namespace thzprop {

// Polarization tilt angle tau: 0 = horizontal, 90 = vertical, 45 = circular.
class Polarization {
public:
    explicit Polarization(double tilt_deg);

    static Polarization horizontal() { return Polarization(0.0); }
    static Polarization vertical() { return Polarization(90.0); }
    static Polarization circular() { return Polarization(45.0); }

    double tilt_deg() const { return tilt_deg_; }

private:
    double tilt_deg_;
};

// Path elevation angle theta above the horizontal, degrees.
class PathGeometry {
public:
    explicit PathGeometry(double elevation_deg);

    static PathGeometry horizontal_path() { return PathGeometry(0.0); }

    double elevation_deg() const { return elevation_deg_; }

private:
    double elevation_deg_;
};

// Power-law pair of the specific-attenuation model gamma_R = k * R^alpha.
struct RainCoefficients {
    double k;     // dimensionless multiplier, > 0
    double alpha; // dimensionless exponent, in (0, 2)
};

struct FogConditions {
    FogConditions(double temperature_c, double water_density_g_m3);

    double temperature_c;       // in [-20, 60]
    double water_density_g_m3;  // liquid water density, in [0, 10]
};

// Free-space path loss, 20*log10(4*pi*R*f/c), dB. Strictly increasing in
// both arguments. Rejects non-positive frequency or distance.
double fspl_db(FrequencyHz f, DistanceM r);

// Combined (k, alpha) for the given polarization tilt and path elevation,
// from the embedded ITU-R P.838-3 regression. Valid for 1 GHz..1 THz.
RainCoefficients rain_coefficients(FrequencyHz f, Polarization pol, PathGeometry geom);

// Rain attenuation over a path of length d: gamma_R * d_km with
// gamma_R = k * rain_rate^alpha dB/km. Zero rain or zero path gives 0 dB.
double itu_rain_attenuation_db(FrequencyHz f, double rain_rate_mm_h, DistanceM d,
                               Polarization pol, PathGeometry geom);

// Crane global rain model over a horizontal path (elevation 0), sharing the
// P.838-3 specific-attenuation coefficients. Valid for paths up to 22.5 km.
double crane_rain_attenuation_db(FrequencyHz f, double rain_rate_mm_h, DistanceM d,
                                 Polarization pol);

// Fog/cloud specific attenuation coefficient K_l, dB/km per g/m^3, from the
// double-Debye permittivity of liquid water. Valid for 10 GHz..1 THz.
double fog_specific_attenuation(FrequencyHz f, double temperature_c);

// Fog attenuation K_l * M * d_km, dB; linear in both water density and path.
double fog_attenuation_db(FrequencyHz f, const FogConditions& cond, DistanceM d);

} // namespace thzprop

#endif // THZPROP_PROPAGATION_HPP
