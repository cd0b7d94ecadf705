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

#include "thzprop/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "thzprop/errors.hpp"

namespace thzprop {

FrequencyHz::FrequencyHz(double hz) : hz_(hz)
{
    if (!std::isfinite(hz) || hz <= 0.0) {
        throw std::domain_error("frequency must be finite and > 0 Hz, got " + std::to_string(hz));
    }
}

DistanceM::DistanceM(double meters) : m_(meters)
{
    if (!std::isfinite(meters) || meters < 0.0) {
        throw std::domain_error("distance must be finite and >= 0 m, got " + std::to_string(meters));
    }
}

double db_from_linear(double ratio)
{
    if (!std::isfinite(ratio) || ratio <= 0.0) {
        throw std::domain_error("dB conversion requires a positive ratio, got " + std::to_string(ratio));
    }
    return 10.0 * std::log10(ratio);
}

double linear_from_db(double db)
{
    if (!std::isfinite(db)) {
        throw std::domain_error("dB value must be finite");
    }
    return std::pow(10.0, db / 10.0);
}

double dbm_from_watts(double watts)
{
    if (!std::isfinite(watts) || watts <= 0.0) {
        throw std::domain_error("dBm conversion requires a positive power, got " + std::to_string(watts));
    }
    return 10.0 * std::log10(watts * 1e3);
}

SweepGrid SweepGrid::from_points(std::vector<double> points)
{
    if (points.empty()) {
        throw std::invalid_argument("sweep grid must not be empty");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i])) {
            throw std::invalid_argument("sweep grid point " + std::to_string(i) + " is not finite");
        }
        if (i > 0 && points[i] <= points[i - 1]) {
            throw std::invalid_argument("sweep grid must be strictly increasing at index " +
                                        std::to_string(i));
        }
    }
    return SweepGrid(std::move(points));
}

SweepGrid SweepGrid::log_space(double start, double stop, std::size_t n)
{
    if (!(start > 0.0) || !(start < stop) || !std::isfinite(start) || !std::isfinite(stop)) {
        throw std::invalid_argument("log grid requires 0 < start < stop");
    }
    if (n < 2) {
        throw std::invalid_argument("log grid requires at least 2 points");
    }
    std::vector<double> pts(n);
    const double log_start = std::log(start);
    const double log_stop = std::log(stop);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        pts[i] = std::exp(log_start + t * (log_stop - log_start));
    }
    pts.front() = start; // endpoints exact
    pts.back() = stop;
    return from_points(std::move(pts));
}

} // namespace thzprop
