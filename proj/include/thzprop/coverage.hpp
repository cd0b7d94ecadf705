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

// Monte Carlo estimation of SNR coverage probability under Poisson point
// process base-station deployments. A test user sits at the origin; a trial
// is covered when at least one station delivers SNR (with array gain) above
// the threshold. Because SNR decreases monotonically with distance, coverage
// is equivalent to having a station within the critical radius, which gives
// the closed-form check 1 - exp(-lambda * pi * r0^2).

#ifndef THZPROP_COVERAGE_HPP
#define THZPROP_COVERAGE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "thzprop/link_budget.hpp"
#include "thzprop/sweep.hpp"
#include "thzprop/units.hpp"

namespace thzprop {

struct Point2D {
    double x_m;
    double y_m;
};

struct DeploymentConfig {
    double bs_density_per_km2;       // > 0
    LinkConfig link;
    double snr_threshold_db = 0.0;
    double window_radius_m = 0.0;    // > 0; must put the window edge below threshold
    double min_link_distance_m = 1.0; // distance clamp guarding the d -> 0 singularity

    void validate() const;
};

struct CoverageEstimate {
    double p_hat;
    double ci_half_width_95;
    std::uint64_t n_trials;
    std::uint64_t seed;
};

struct CriticalRadius {
    double radius_m;
    bool threshold_reachable; // false: SNR is below threshold even at the clamp distance
};

// One Poisson-point-process draw on a disk of the given radius centered at
// the origin: count ~ Poisson(density * pi * radius^2 / 1e6), positions
// i.i.d. uniform on the disk.
std::vector<Point2D> sample_ppp(double density_per_km2, double radius_m, std::mt19937_64& eng);

// Root of snr_db(link, r) = threshold, bisected to 1e-6 relative tolerance.
// Distances are clamped at min_link_distance, so an unreachable threshold
// reports {min_link_distance, false}.
CriticalRadius critical_radius(const DeploymentConfig& cfg);

// DeploymentConfig with the default simulation window: 3 x critical radius
// (capped at 20 km), which the edge-truncation property test justifies.
DeploymentConfig make_deployment_config(double bs_density_per_km2, LinkConfig link,
                                        double snr_threshold_db = 0.0,
                                        double min_link_distance_m = 1.0);

// Monte Carlo coverage estimate. Deterministic for fixed (cfg, n_trials,
// seed) regardless of n_threads (0 = auto): trials draw from per-trial
// substreams and the covered-count merge is commutative.
CoverageEstimate coverage_probability(const DeploymentConfig& cfg, std::uint64_t n_trials,
                                      std::uint64_t seed, unsigned n_threads = 0);

struct CoverageSweepConfig {
    FrequencyHz carrier;
    int n_tx_elements;
    int n_rx_elements;
};

// Seed for the (series, point) cell of a coverage sweep; cell (0, 0) keeps
// the caller's seed so a single-cell sweep equals coverage_probability.
std::uint64_t sweep_point_seed(std::uint64_t seed, std::size_t series_idx, std::size_t point_idx);

// Coverage probability per (carrier, array) configuration across densities.
// Each configuration keeps the base link's power/noise terms but swaps in
// the figure convention for its carrier: UMi-LOS with 400 MHz bandwidth at
// or below 100 GHz, terahertz model with 50 GHz bandwidth above. Densities
// must be strictly increasing.
SweepTable coverage_sweep(const DeploymentConfig& base, const std::vector<double>& densities_per_km2,
                          const std::vector<CoverageSweepConfig>& configs, std::uint64_t n_trials,
                          std::uint64_t seed, unsigned n_threads = 0);

// The figure convention used by coverage_sweep and the CLI: carrier at or
// below 100 GHz -> UMi-LOS, 400 MHz; above -> terahertz model with the given
// absorption table (bundled table when null), 50 GHz.
LinkConfig figure_link_for_carrier(FrequencyHz carrier, const AbsorptionTable* absorption = nullptr);

} // namespace thzprop

#endif // THZPROP_COVERAGE_HPP
