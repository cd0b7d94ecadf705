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

#include "thzprop/link_budget.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "thzprop/errors.hpp"

namespace thzprop {

namespace {

constexpr double kThermalNoiseFloorDbmPerHz = -174.0; // 290 K reference

std::string short_double(double v)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

void LinkConfig::validate() const
{
    if (!std::isfinite(tx_power_w) || tx_power_w <= 0.0) {
        throw std::domain_error("transmit power must be positive");
    }
    if (!std::isfinite(bandwidth_hz) || bandwidth_hz <= 0.0) {
        throw std::domain_error("bandwidth must be positive");
    }
    if (!std::isfinite(noise_figure_db)) {
        throw std::domain_error("noise figure must be finite");
    }
    if (n_tx_elements < 1 || n_rx_elements < 1) {
        throw std::invalid_argument("antenna element counts must be >= 1");
    }
}

double noise_power_dbm(double bandwidth_hz, double noise_figure_db)
{
    if (!std::isfinite(bandwidth_hz) || bandwidth_hz <= 0.0) {
        throw std::domain_error("bandwidth must be positive, got " +
                                std::to_string(bandwidth_hz));
    }
    return kThermalNoiseFloorDbmPerHz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double beamforming_gain_db(int n_tx, int n_rx)
{
    if (n_tx < 1 || n_rx < 1) {
        throw std::invalid_argument("antenna element counts must be >= 1");
    }
    return 10.0 * std::log10(static_cast<double>(n_tx) * static_cast<double>(n_rx));
}

double snr_db(const LinkConfig& cfg, DistanceM d, bool include_beamforming)
{
    cfg.validate();
    const double base = dbm_from_watts(cfg.tx_power_w) - pathloss_db(cfg.model, cfg.carrier, d) -
                        noise_power_dbm(cfg.bandwidth_hz, cfg.noise_figure_db);
    if (!include_beamforming) {
        return base;
    }
    return base + beamforming_gain_db(cfg.n_tx_elements, cfg.n_rx_elements);
}

SweepTable snr_sweep(const LinkConfig& cfg, const SweepGrid& carriers_hz,
                     const std::vector<double>& distances_m, bool include_beamforming,
                     SnrSweepOrientation orientation)
{
    if (distances_m.empty()) {
        throw std::invalid_argument("snr sweep needs at least one distance");
    }

    if (orientation == SnrSweepOrientation::series_per_distance) {
        std::vector<double> x;
        x.reserve(carriers_hz.size());
        for (double f : carriers_hz.points()) {
            x.push_back(f / 1e9);
        }
        std::vector<SweepTable::Series> series;
        series.reserve(distances_m.size());
        for (double dist : distances_m) {
            SweepTable::Series s;
            s.label = "snr_db_d" + short_double(dist) + "m";
            s.y.reserve(carriers_hz.size());
            for (double f : carriers_hz.points()) {
                LinkConfig point = cfg;
                point.carrier = FrequencyHz(f);
                s.y.push_back(snr_db(point, DistanceM(dist), include_beamforming));
            }
            series.push_back(std::move(s));
        }
        return SweepTable("frequency_ghz", std::move(x), std::move(series));
    }

    std::vector<SweepTable::Series> series;
    series.reserve(carriers_hz.size());
    for (double f : carriers_hz.points()) {
        LinkConfig point = cfg;
        point.carrier = FrequencyHz(f);
        SweepTable::Series s;
        s.label = "snr_db_f" + short_double(f / 1e9) + "ghz";
        s.y.reserve(distances_m.size());
        for (double dist : distances_m) {
            s.y.push_back(snr_db(point, DistanceM(dist), include_beamforming));
        }
        series.push_back(std::move(s));
    }
    return SweepTable("distance_m", distances_m, std::move(series));
}

double two_way_loss_db(const PathLossModel& model, FrequencyHz f, DistanceM d)
{
    return 2.0 * pathloss_db(model, f, d);
}

} // namespace thzprop
