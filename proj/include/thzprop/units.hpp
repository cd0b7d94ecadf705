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

#ifndef THZPROP_UNITS_HPP
#define THZPROP_UNITS_HPP

#include <cstddef>
#include <vector>

namespace thzprop {

inline constexpr double kSpeedOfLightMPerS = 299792458.0;

// Carrier or sweep frequency. Finite and strictly positive.
class FrequencyHz {
public:
    explicit FrequencyHz(double hz);

    double hz() const { return hz_; }
    double ghz() const { return hz_ / 1e9; }

private:
    double hz_;
};

// Path distance in meters. Finite and non-negative; operations that cannot
// accept a zero-length path reject it themselves.
class DistanceM {
public:
    explicit DistanceM(double meters);

    double m() const { return m_; }
    double km() const { return m_ * 1e-3; }

private:
    double m_;
};

double db_from_linear(double ratio);
double linear_from_db(double db);
double dbm_from_watts(double watts);

// Strictly increasing, non-empty list of sweep abscissae (Hz or m).
class SweepGrid {
public:
    static SweepGrid from_points(std::vector<double> points);

    // n geometrically spaced points with both endpoints exact.
    static SweepGrid log_space(double start, double stop, std::size_t n);

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double front() const { return points_.front(); }
    double back() const { return points_.back(); }

private:
    explicit SweepGrid(std::vector<double> points) : points_(std::move(points)) {}

    std::vector<double> points_;
};

} // namespace thzprop

#endif // THZPROP_UNITS_HPP
