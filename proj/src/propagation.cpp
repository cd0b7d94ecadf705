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

#include "thzprop/propagation.hpp"

#include <cmath>
#include <string>

#include "thzprop/errors.hpp"

namespace thzprop {

namespace {

constexpr double kPi = 3.14159265358979323846;

// cos() in degrees with exact values at the quadrant angles, so that the
// polarization/elevation weight hits 1, 0, -1 without trig rounding.
double cos_deg(double deg)
{
    const double m = std::fmod(std::fabs(deg), 360.0);
    if (m == 0.0) return 1.0;
    if (m == 90.0 || m == 270.0) return 0.0;
    if (m == 180.0) return -1.0;
    return std::cos(m * (kPi / 180.0));
}

void check_rain_validity(double f_hz)
{
    if (f_hz < 1e9 || f_hz > 1e12) {
        throw model_validity_error("rain model is valid for 1 GHz..1 THz, got " +
                                   std::to_string(f_hz * 1e-9) + " GHz");
    }
}

// =================================================================================================
// ITU-R P.838-3, "Specific attenuation model for rain for use in prediction
// methods": log10 k and alpha are each a sum of log-frequency Gaussians plus
// a linear term, log10 f in GHz.
// =================================================================================================

struct GaussianTerm {
    double a, b, c;
};

// Table 1 of P.838-3 (k_H)
constexpr GaussianTerm kKH[4] = {
    {-5.33980, -0.10008, 1.13098},
    {-0.35351, 1.26970, 0.45400},
    {-0.23789, 0.86036, 0.15354},
    {-0.94158, 0.64552, 0.16817},
};
constexpr double kKH_m = -0.18961; // Table 1, m_k
constexpr double kKH_c = 0.71147;  // Table 1, c_k

// Table 2 of P.838-3 (k_V)
constexpr GaussianTerm kKV[4] = {
    {-3.80595, 0.56934, 0.81061},
    {-3.44965, -0.22911, 0.51059},
    {-0.39902, 0.73042, 0.11899},
    {0.50167, 1.07319, 0.27195},
};
constexpr double kKV_m = -0.16398; // Table 2, m_k
constexpr double kKV_c = 0.63297;  // Table 2, c_k

// Table 3 of P.838-3 (alpha_H)
constexpr GaussianTerm kAH[5] = {
    {-0.14318, 1.82442, -0.55187},
    {0.29591, 0.77564, 0.19822},
    {0.32177, 0.62773, 0.13164},
    {-5.37610, -0.96230, 1.47828},
    {16.1721, -3.29980, 3.43990},
};
constexpr double kAH_m = 0.67849;  // Table 3, m_alpha
constexpr double kAH_c = -1.95537; // Table 3, c_alpha

// Table 4 of P.838-3 (alpha_V)
constexpr GaussianTerm kAV[5] = {
    {-0.07771, 2.33840, -0.76284},
    {0.56727, 0.95545, 0.54039},
    {-0.20238, 1.14520, 0.26809},
    {-48.2991, 0.791669, 0.116226},
    {48.5833, 0.791459, 0.116479},
};
constexpr double kAV_m = -0.053739; // Table 4, m_alpha
constexpr double kAV_c = 0.83433;   // Table 4, c_alpha

template <std::size_t N>
double gaussian_sum(double log10_f, const GaussianTerm (&terms)[N])
{
    double s = 0.0;
    for (const auto& t : terms) {
        const double u = (log10_f - t.b) / t.c;
        s += t.a * std::exp(-(u * u));
    }
    return s;
}

struct PerPolarization {
    double k_h, alpha_h, k_v, alpha_v;
};

PerPolarization p838_coefficients(double f_ghz)
{
    const double lf = std::log10(f_ghz);
    PerPolarization p;
    p.k_h = std::pow(10.0, gaussian_sum(lf, kKH) + kKH_m * lf + kKH_c);
    p.k_v = std::pow(10.0, gaussian_sum(lf, kKV) + kKV_m * lf + kKV_c);
    p.alpha_h = gaussian_sum(lf, kAH) + kAH_m * lf + kAH_c;
    p.alpha_v = gaussian_sum(lf, kAV) + kAV_m * lf + kAV_c;
    return p;
}

} // namespace

Polarization::Polarization(double tilt_deg) : tilt_deg_(tilt_deg)
{
    if (!std::isfinite(tilt_deg) || tilt_deg < 0.0 || tilt_deg > 90.0) {
        throw std::domain_error("polarization tilt must be in [0, 90] degrees");
    }
}

PathGeometry::PathGeometry(double elevation_deg) : elevation_deg_(elevation_deg)
{
    if (!std::isfinite(elevation_deg) || elevation_deg < 0.0 || elevation_deg > 90.0) {
        throw std::domain_error("path elevation must be in [0, 90] degrees");
    }
}

FogConditions::FogConditions(double temperature_c_in, double water_density_g_m3_in)
    : temperature_c(temperature_c_in), water_density_g_m3(water_density_g_m3_in)
{
    if (!std::isfinite(temperature_c) || temperature_c < -20.0 || temperature_c > 60.0) {
        throw std::domain_error("fog temperature must be in [-20, 60] C");
    }
    if (!std::isfinite(water_density_g_m3) || water_density_g_m3 < 0.0 ||
        water_density_g_m3 > 10.0) {
        throw std::domain_error("liquid water density must be in [0, 10] g/m^3");
    }
}

double fspl_db(FrequencyHz f, DistanceM r)
{
    if (r.m() <= 0.0) {
        throw std::domain_error("free-space path loss requires a positive distance");
    }
    return 20.0 * std::log10(4.0 * kPi * r.m() * f.hz() / kSpeedOfLightMPerS);
}

RainCoefficients rain_coefficients(FrequencyHz f, Polarization pol, PathGeometry geom)
{
    check_rain_validity(f.hz());
    const PerPolarization p = p838_coefficients(f.ghz());

    // Equations 4 and 5 of P.838-3. The weight cos^2(theta)*cos(2*tau) is
    // +-1 exactly on the pure H/V horizontal paths, where the combination
    // reduces algebraically to one coefficient pair; take that branch
    // directly so the reduction is exact.
    const double ce = cos_deg(geom.elevation_deg());
    const double w = ce * ce * cos_deg(2.0 * pol.tilt_deg());
    if (w == 1.0) return {p.k_h, p.alpha_h};
    if (w == -1.0) return {p.k_v, p.alpha_v};

    const double k = (p.k_h + p.k_v + (p.k_h - p.k_v) * w) / 2.0;
    const double alpha =
        (p.k_h * p.alpha_h + p.k_v * p.alpha_v + (p.k_h * p.alpha_h - p.k_v * p.alpha_v) * w) /
        (2.0 * k);
    return {k, alpha};
}

double itu_rain_attenuation_db(FrequencyHz f, double rain_rate_mm_h, DistanceM d,
                               Polarization pol, PathGeometry geom)
{
    check_rain_validity(f.hz());
    if (!std::isfinite(rain_rate_mm_h) || rain_rate_mm_h < 0.0) {
        throw std::domain_error("rain rate must be >= 0 mm/h");
    }
    if (rain_rate_mm_h == 0.0 || d.m() == 0.0) {
        return 0.0;
    }
    const RainCoefficients rc = rain_coefficients(f, pol, geom);
    const double gamma = rc.k * std::pow(rain_rate_mm_h, rc.alpha); // dB/km
    return gamma * d.km();
}

double crane_rain_attenuation_db(FrequencyHz f, double rain_rate_mm_h, DistanceM d,
                                 Polarization pol)
{
    check_rain_validity(f.hz());
    if (!std::isfinite(rain_rate_mm_h) || rain_rate_mm_h < 0.0) {
        throw std::domain_error("rain rate must be >= 0 mm/h");
    }
    const double D = d.km();
    if (D > 22.5) {
        throw model_validity_error("Crane global model is valid for paths up to 22.5 km, got " +
                                   std::to_string(D) + " km");
    }
    if (rain_rate_mm_h == 0.0 || D == 0.0) {
        return 0.0;
    }

    const RainCoefficients rc = rain_coefficients(f, pol, PathGeometry::horizontal_path());
    const double gamma = rc.k * std::pow(rain_rate_mm_h, rc.alpha); // dB/km
    const double beta = rc.alpha;

    // Crane global model empirical path terms (rain rate in mm/h, path in km).
    const double ln_rate = std::log(rain_rate_mm_h);
    const double delta = 3.8 - 0.6 * ln_rate;
    const double b = 2.3 * std::pow(rain_rate_mm_h, -0.17);
    const double c = 0.026 - 0.03 * ln_rate;
    const double u = (std::log(b) + c * delta) / delta;

    const double ub = u * beta;
    if (D <= delta) {
        return gamma * (std::exp(ub * D) - 1.0) / ub;
    }
    const double cb = c * beta;
    const double b_pow = std::pow(b, beta);
    return gamma * ((std::exp(ub * delta) - 1.0) / ub - b_pow * std::exp(cb * delta) / cb +
                    b_pow * std::exp(cb * D) / cb);
}

// =================================================================================================
// ITU-R P.840 cloud/fog attenuation: K_l from the double-Debye permittivity
// of liquid water, dB/km per g/m^3, frequency in GHz.
// =================================================================================================

double fog_specific_attenuation(FrequencyHz f, double temperature_c)
{
    if (f.hz() < 10e9 || f.hz() > 1e12) {
        throw model_validity_error("fog model is valid for 10 GHz..1 THz, got " +
                                   std::to_string(f.ghz()) + " GHz");
    }
    if (!std::isfinite(temperature_c) || temperature_c < -20.0 || temperature_c > 60.0) {
        throw std::domain_error("fog temperature must be in [-20, 60] C");
    }

    const double fg = f.ghz();
    const double theta = 300.0 / (temperature_c + 273.15);
    const double t1 = theta - 1.0;

    const double eps0 = 77.66 + 103.3 * t1;
    const double eps1 = 0.0671 * eps0;
    const double eps2 = 3.52;
    const double fp = 20.20 - 146.0 * t1 + 316.0 * t1 * t1; // principal relaxation, GHz
    const double fs = 39.8 * fp;                            // secondary relaxation, GHz

    const double rp = 1.0 + (fg / fp) * (fg / fp);
    const double rs = 1.0 + (fg / fs) * (fg / fs);
    const double eps_im = fg * (eps0 - eps1) / (fp * rp) + fg * (eps1 - eps2) / (fs * rs);
    const double eps_re = (eps0 - eps1) / rp + (eps1 - eps2) / rs + eps2;

    const double eta = (2.0 + eps_re) / eps_im;
    return 0.819 * fg / (eps_im * (1.0 + eta * eta));
}

double fog_attenuation_db(FrequencyHz f, const FogConditions& cond, DistanceM d)
{
    const double k_l = fog_specific_attenuation(f, cond.temperature_c);
    return k_l * cond.water_density_g_m3 * d.km();
}

} // namespace thzprop
