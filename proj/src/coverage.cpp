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

#include "thzprop/coverage.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <thread>

#include "thzprop/errors.hpp"
#include "thzprop/rng.hpp"

namespace thzprop {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kWindowCapM = 20000.0;
constexpr double kMaxMeanStationsPerTrial = 1e7; // guardrail against runaway intensities

std::string short_double(double v)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double mean_station_count(double density_per_km2, double radius_m)
{
    return density_per_km2 * kPi * radius_m * radius_m / 1e6;
}

// SNR seen by the origin user from a station at radial distance r, with the
// minimum-distance clamp applied. Array gain included (deployment figures
// model both ends beamformed).
double snr_at(const DeploymentConfig& cfg, double r_m)
{
    const double d = std::max(r_m, cfg.min_link_distance_m);
    return snr_db(cfg.link, DistanceM(d), true);
}

std::uint64_t run_trials(const DeploymentConfig& cfg, std::uint64_t first_trial,
                         std::uint64_t last_trial, std::uint64_t seed)
{
    std::uint64_t covered = 0;
    for (std::uint64_t t = first_trial; t < last_trial; ++t) {
        auto eng = rng::substream_engine(seed, t);
        const auto stations = sample_ppp(cfg.bs_density_per_km2, cfg.window_radius_m, eng);
        if (stations.empty()) {
            continue;
        }
        double nearest_sq = std::numeric_limits<double>::infinity();
        for (const auto& p : stations) {
            nearest_sq = std::min(nearest_sq, p.x_m * p.x_m + p.y_m * p.y_m);
        }
        // SNR is strictly decreasing in distance, so the strongest station is
        // the nearest one.
        if (snr_at(cfg, std::sqrt(nearest_sq)) >= cfg.snr_threshold_db) {
            ++covered;
        }
    }
    return covered;
}

} // namespace

void DeploymentConfig::validate() const
{
    if (!std::isfinite(bs_density_per_km2) || bs_density_per_km2 <= 0.0) {
        throw config_error("base-station density must be positive");
    }
    if (!std::isfinite(window_radius_m) || window_radius_m <= 0.0) {
        throw config_error("window radius must be positive");
    }
    if (!std::isfinite(min_link_distance_m) || min_link_distance_m <= 0.0) {
        throw config_error("minimum link distance must be positive");
    }
    if (!std::isfinite(snr_threshold_db)) {
        throw config_error("SNR threshold must be finite");
    }
    link.validate();
    if (mean_station_count(bs_density_per_km2, window_radius_m) > kMaxMeanStationsPerTrial) {
        throw config_error("deployment intensity too large: more than 1e7 stations per trial");
    }
}

std::vector<Point2D> sample_ppp(double density_per_km2, double radius_m, std::mt19937_64& eng)
{
    if (!std::isfinite(density_per_km2) || density_per_km2 < 0.0) {
        throw std::domain_error("density must be >= 0");
    }
    if (!std::isfinite(radius_m) || radius_m <= 0.0) {
        throw std::domain_error("disk radius must be positive");
    }
    const double mean = mean_station_count(density_per_km2, radius_m);
    if (mean > kMaxMeanStationsPerTrial) {
        throw config_error("PPP intensity too large: mean count exceeds 1e7");
    }
    const std::uint64_t n = rng::poisson_count(mean, eng);
    std::vector<Point2D> points;
    points.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double r = radius_m * std::sqrt(rng::uniform01(eng));
        const double ang = 2.0 * kPi * rng::uniform01(eng);
        points.push_back({r * std::cos(ang), r * std::sin(ang)});
    }
    return points;
}

CriticalRadius critical_radius(const DeploymentConfig& cfg)
{
    cfg.link.validate();
    const double lo0 = cfg.min_link_distance_m;
    if (snr_at(cfg, lo0) < cfg.snr_threshold_db) {
        return {lo0, false};
    }

    // Bracket the root by doubling, then bisect. Path loss grows without
    // bound in distance, so the doubling always terminates.
    double lo = lo0;
    double hi = lo0 * 2.0;
    int guard = 0;
    while (snr_at(cfg, hi) >= cfg.snr_threshold_db) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 200) {
            throw numeric_error("critical radius search failed to bracket the threshold");
        }
    }
    while ((hi - lo) > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (snr_at(cfg, mid) >= cfg.snr_threshold_db) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi), true};
}

DeploymentConfig make_deployment_config(double bs_density_per_km2, LinkConfig link,
                                        double snr_threshold_db, double min_link_distance_m)
{
    DeploymentConfig cfg{bs_density_per_km2, std::move(link), snr_threshold_db,
                         /*window_radius_m=*/0.0, min_link_distance_m};
    const CriticalRadius r0 = critical_radius(cfg);
    cfg.window_radius_m = std::min(3.0 * std::max(r0.radius_m, min_link_distance_m), kWindowCapM);
    cfg.validate();
    return cfg;
}

CoverageEstimate coverage_probability(const DeploymentConfig& cfg, std::uint64_t n_trials,
                                      std::uint64_t seed, unsigned n_threads)
{
    cfg.validate();
    if (n_trials < 1) {
        throw std::invalid_argument("coverage estimation needs at least one trial");
    }
    // Stations beyond the window edge must not be able to cover, otherwise
    // the window truncates real coverage.
    if (snr_at(cfg, cfg.window_radius_m) >= cfg.snr_threshold_db) {
        throw config_error("window too small relative to the critical radius: SNR at the window "
                           "edge still exceeds the threshold");
    }

    if (n_threads == 0) {
        n_threads = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
    }
    n_threads = static_cast<unsigned>(
        std::min<std::uint64_t>(n_threads, n_trials));

    std::uint64_t covered = 0;
    if (n_threads <= 1) {
        covered = run_trials(cfg, 0, n_trials, seed);
    } else {
        std::vector<std::uint64_t> partial(n_threads, 0);
        std::vector<std::thread> workers;
        workers.reserve(n_threads);
        const std::uint64_t chunk = (n_trials + n_threads - 1) / n_threads;
        for (unsigned w = 0; w < n_threads; ++w) {
            const std::uint64_t first = static_cast<std::uint64_t>(w) * chunk;
            const std::uint64_t last = std::min(first + chunk, n_trials);
            workers.emplace_back([&, w, first, last] {
                partial[w] = run_trials(cfg, first, last, seed);
            });
        }
        for (auto& t : workers) {
            t.join();
        }
        for (std::uint64_t c : partial) {
            covered += c; // commutative merge: result independent of scheduling
        }
    }

    CoverageEstimate est;
    est.p_hat = static_cast<double>(covered) / static_cast<double>(n_trials);
    est.ci_half_width_95 =
        1.96 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n_trials));
    est.n_trials = n_trials;
    est.seed = seed;
    return est;
}

std::uint64_t sweep_point_seed(std::uint64_t seed, std::size_t series_idx, std::size_t point_idx)
{
    return seed + static_cast<std::uint64_t>(series_idx) * 0x9E3779B97F4A7C15ULL +
           static_cast<std::uint64_t>(point_idx) * 0xC2B2AE3D27D4EB4FULL;
}

LinkConfig figure_link_for_carrier(FrequencyHz carrier, const AbsorptionTable* absorption)
{
    LinkConfig link{
        0.5,   // W
        10.0,  // dB noise figure
        4e8,   // placeholder, fixed below
        carrier,
        FreeSpace{},
        16,
        4,
    };
    if (carrier.hz() <= 100e9) {
        link.bandwidth_hz = 4e8;
        link.model = UrbanCanyonLos{};
    } else {
        link.bandwidth_hz = 50e9;
        link.model = Thz{absorption ? *absorption : default_absorption_table()};
    }
    return link;
}

SweepTable coverage_sweep(const DeploymentConfig& base, const std::vector<double>& densities_per_km2,
                          const std::vector<CoverageSweepConfig>& configs, std::uint64_t n_trials,
                          std::uint64_t seed, unsigned n_threads)
{
    if (densities_per_km2.empty() || configs.empty()) {
        throw std::invalid_argument("coverage sweep needs at least one density and one config");
    }

    std::vector<SweepTable::Series> series;
    series.reserve(configs.size());
    for (std::size_t s = 0; s < configs.size(); ++s) {
        const auto& cc = configs[s];
        const AbsorptionTable* table = nullptr;
        if (const auto* thz = std::get_if<Thz>(&base.link.model); thz && thz->absorption) {
            table = &*thz->absorption;
        }
        LinkConfig link = figure_link_for_carrier(cc.carrier, table);
        link.tx_power_w = base.link.tx_power_w;
        link.noise_figure_db = base.link.noise_figure_db;
        link.n_tx_elements = cc.n_tx_elements;
        link.n_rx_elements = cc.n_rx_elements;

        SweepTable::Series out;
        out.label = "p_cov_f" + short_double(cc.carrier.hz() / 1e9) + "ghz_" +
                    std::to_string(cc.n_tx_elements) + "x" + std::to_string(cc.n_rx_elements);
        out.y.reserve(densities_per_km2.size());
        for (std::size_t i = 0; i < densities_per_km2.size(); ++i) {
            DeploymentConfig cfg = make_deployment_config(
                densities_per_km2[i], link, base.snr_threshold_db, base.min_link_distance_m);
            const auto est =
                coverage_probability(cfg, n_trials, sweep_point_seed(seed, s, i), n_threads);
            out.y.push_back(est.p_hat);
        }
        series.push_back(std::move(out));
    }
    return SweepTable("density_per_km2", densities_per_km2, std::move(series));
}

} // namespace thzprop
