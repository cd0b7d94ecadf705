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

// Thermal-noise and SNR computations over the path-loss models, plus the
// aggregate array gain and a two-way (monostatic) loss helper.

#ifndef THZPROP_LINK_BUDGET_HPP
#define THZPROP_LINK_BUDGET_HPP

#include <vector>

#include "thzprop/channel.hpp"
#include "thzprop/sweep.hpp"
#include "thzprop/units.hpp"

namespace thzprop {

struct LinkConfig {
    double tx_power_w;      // > 0
    double noise_figure_db;
    double bandwidth_hz;    // > 0
    FrequencyHz carrier;
    PathLossModel model;
    int n_tx_elements = 1;  // >= 1
    int n_rx_elements = 1;  // >= 1

    void validate() const;
};

// Thermal noise power with receiver noise figure:
// -174 dBm/Hz (290 K) + 10*log10(B) + F.
double noise_power_dbm(double bandwidth_hz, double noise_figure_db);

// Aggregate coherent array gain 10*log10(n_tx * n_rx), dB.
double beamforming_gain_db(int n_tx, int n_rx);

// P_tx[dBm] + (array gain if requested) - pathloss - noise, dB. Strictly
// decreasing in distance.
double snr_db(const LinkConfig& cfg, DistanceM d, bool include_beamforming);

enum class SnrSweepOrientation {
    series_per_distance, // x = carrier grid, one series per distance
    series_per_carrier,  // x = distances, one series per carrier
};

// SNR evaluated pointwise over a carrier grid and a distance set; the
// orientation picks which of the two becomes the x axis. The grid values are
// in Hz; the emitted x column is scaled to GHz (per-distance orientation) or
// kept in meters (per-carrier orientation).
SweepTable snr_sweep(const LinkConfig& cfg, const SweepGrid& carriers_hz,
                     const std::vector<double>& distances_m, bool include_beamforming,
                     SnrSweepOrientation orientation = SnrSweepOrientation::series_per_distance);

// Two-way (out-and-back) propagation loss: 2 x one-way path loss. No target
// cross-section term.
double two_way_loss_db(const PathLossModel& model, FrequencyHz f, DistanceM d);

} // namespace thzprop

#endif // THZPROP_LINK_BUDGET_HPP
