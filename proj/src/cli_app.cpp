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

#include "thzprop/cli_app.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "thzprop/coverage.hpp"
#include "thzprop/errors.hpp"
#include "thzprop/link_budget.hpp"
#include "thzprop/propagation.hpp"
#include "thzprop/table_io.hpp"

namespace thzprop::cli {

namespace {

std::string shortest(double v)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_plain_double(const std::string& text, const char* what)
{
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
        throw config_error(std::string("invalid ") + what + ": '" + text + "'");
    }
    return v;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            items.push_back(text.substr(start));
            break;
        }
        items.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return items;
}

std::vector<double> parse_double_list(const std::string& text, const char* what)
{
    std::vector<double> values;
    for (const auto& item : split_list(text)) {
        values.push_back(parse_plain_double(item, what));
    }
    return values;
}

std::vector<double> parse_frequency_list(const std::string& text)
{
    std::vector<double> values;
    for (const auto& item : split_list(text)) {
        values.push_back(parse_frequency_hz(item));
    }
    return values;
}

struct OutputOptions {
    std::string out_path;          // empty: stream
    std::string format = "csv";    // csv | svg
    SvgOptions svg;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out)
{
    cmd->add_option("--out", out.out_path, "Output path (default: standard output)");
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "svg"}))
        ->capture_default_str();
}

void emit(const SweepTable& table, const OutputOptions& opt, std::ostream& fallback)
{
    const std::string payload = opt.format == "svg" ? to_svg(table, opt.svg) : to_csv(table);
    if (opt.out_path.empty()) {
        fallback << payload;
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
        throw config_error("cannot open output file: " + opt.out_path);
    }
    file << payload;
    if (!file) {
        throw config_error("failed writing output file: " + opt.out_path);
    }
}

std::optional<AbsorptionTable> load_absorption_override(const std::string& path)
{
    if (path.empty()) {
        return std::nullopt;
    }
    std::ifstream file(path);
    if (!file) {
        throw config_error("cannot open absorption file: " + path);
    }
    return load_absorption_table(file);
}

// ---- fspl ----------------------------------------------------------------

struct FsplArgs {
    std::string f_min = "1e9";
    std::string f_max = "1e12";
    std::string ranges = "50,1000";
    std::size_t points = 200;
    OutputOptions out;
};

SweepTable run_fspl(const FsplArgs& a)
{
    const SweepGrid grid = SweepGrid::log_space(parse_frequency_hz(a.f_min),
                                                parse_frequency_hz(a.f_max), a.points);
    const auto ranges = parse_double_list(a.ranges, "range");
    std::vector<double> x;
    x.reserve(grid.size());
    for (double f : grid.points()) {
        x.push_back(f / 1e9);
    }
    std::vector<SweepTable::Series> series;
    for (double r : ranges) {
        SweepTable::Series s;
        s.label = "fspl_db_r" + shortest(r) + "m";
        for (double f : grid.points()) {
            s.y.push_back(fspl_db(FrequencyHz(f), DistanceM(r)));
        }
        series.push_back(std::move(s));
    }
    return SweepTable("frequency_ghz", std::move(x), std::move(series));
}

// ---- rain ----------------------------------------------------------------

struct RainArgs {
    std::string model = "both";
    std::string rates = "1,4,20";
    double distance_m = 1000.0;
    std::string polarization = "h";
    double elevation_deg = 0.0;
    std::size_t points = 200;
    OutputOptions out;
};

SweepTable run_rain(const RainArgs& a)
{
    const SweepGrid grid = SweepGrid::log_space(1e9, 1e12, a.points);
    const auto rates = parse_double_list(a.rates, "rain rate");
    const Polarization pol = a.polarization == "v" ? Polarization::vertical()
                                                   : Polarization::horizontal();
    const PathGeometry geom(a.elevation_deg);
    const DistanceM d(a.distance_m);

    std::vector<double> x;
    for (double f : grid.points()) {
        x.push_back(f / 1e9);
    }
    std::vector<SweepTable::Series> series;
    if (a.model == "itu" || a.model == "both") {
        for (double rate : rates) {
            SweepTable::Series s;
            s.label = "itu_rain_db_r" + shortest(rate) + "mmh";
            for (double f : grid.points()) {
                s.y.push_back(itu_rain_attenuation_db(FrequencyHz(f), rate, d, pol, geom));
            }
            series.push_back(std::move(s));
        }
    }
    if (a.model == "crane" || a.model == "both") {
        for (double rate : rates) {
            SweepTable::Series s;
            s.label = "crane_rain_db_r" + shortest(rate) + "mmh";
            for (double f : grid.points()) {
                s.y.push_back(crane_rain_attenuation_db(FrequencyHz(f), rate, d, pol));
            }
            series.push_back(std::move(s));
        }
    }
    return SweepTable("frequency_ghz", std::move(x), std::move(series));
}

// ---- fog -----------------------------------------------------------------

struct FogArgs {
    std::string densities = "0.01,0.05,0.5";
    double temperature_c = 15.0;
    double distance_m = 100.0;
    std::size_t points = 200;
    OutputOptions out;
};

SweepTable run_fog(const FogArgs& a)
{
    const SweepGrid grid = SweepGrid::log_space(10e9, 1e12, a.points);
    const auto densities = parse_double_list(a.densities, "water density");
    const DistanceM d(a.distance_m);

    std::vector<double> x;
    for (double f : grid.points()) {
        x.push_back(f / 1e9);
    }
    std::vector<SweepTable::Series> series;
    for (double m : densities) {
        const FogConditions cond(a.temperature_c, m);
        SweepTable::Series s;
        s.label = "fog_db_m" + shortest(m) + "gm3";
        for (double f : grid.points()) {
            s.y.push_back(fog_attenuation_db(FrequencyHz(f), cond, d));
        }
        series.push_back(std::move(s));
    }
    return SweepTable("frequency_ghz", std::move(x), std::move(series));
}

// ---- snr -----------------------------------------------------------------

struct SnrArgs {
    std::string band = "mmwave";
    std::string carriers;            // empty: band default
    std::string distances = "5,50,150";
    std::string bandwidth;           // empty: per-carrier figure convention
    double tx_power_w = 0.5;
    double noise_figure_db = 10.0;
    bool beamforming = false;
    int bs_elems = 16;
    int ue_elems = 4;
    std::string absorption_file;
    OutputOptions out;
};

SweepTable run_snr(const SnrArgs& a)
{
    std::string carriers_text = a.carriers;
    if (carriers_text.empty()) {
        if (a.band == "mmwave") {
            carriers_text = "28G,41G,60G,100G";
        } else if (a.band == "thz") {
            carriers_text = "300G,400G,700G,1000G";
        } else {
            throw config_error("--band custom requires --carriers");
        }
    }
    const auto carriers = parse_frequency_list(carriers_text);
    const auto distances = parse_double_list(a.distances, "distance");
    if (distances.empty()) {
        throw config_error("--distances must not be empty");
    }
    const auto absorption = load_absorption_override(a.absorption_file);
    const bool has_bandwidth_override = !a.bandwidth.empty();
    const double bandwidth_override =
        has_bandwidth_override ? parse_frequency_hz(a.bandwidth) : 0.0;

    std::vector<double> x;
    for (double f : carriers) {
        x.push_back(f / 1e9);
    }
    std::vector<SweepTable::Series> series;
    for (double dist : distances) {
        SweepTable::Series s;
        s.label = "snr_db_d" + shortest(dist) + "m";
        for (double f : carriers) {
            LinkConfig link = figure_link_for_carrier(FrequencyHz(f),
                                                      absorption ? &*absorption : nullptr);
            link.tx_power_w = a.tx_power_w;
            link.noise_figure_db = a.noise_figure_db;
            link.n_tx_elements = a.bs_elems;
            link.n_rx_elements = a.ue_elems;
            if (has_bandwidth_override) {
                link.bandwidth_hz = bandwidth_override;
            }
            s.y.push_back(snr_db(link, DistanceM(dist), a.beamforming));
        }
        series.push_back(std::move(s));
    }
    return SweepTable("frequency_ghz", std::move(x), std::move(series));
}

// ---- coverage ------------------------------------------------------------

struct CoverageArgs {
    std::string carrier = "40e9";
    int bs_elems = 16;
    int ue_elems = 4;
    std::string densities = "10,20,40,80,160";
    double threshold_db = 0.0;
    std::uint64_t trials = 20000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string absorption_file;
    OutputOptions out;
};

SweepTable run_coverage(const CoverageArgs& a)
{
    const auto densities = parse_double_list(a.densities, "density");
    if (densities.empty()) {
        throw config_error("--densities must not be empty");
    }
    const auto absorption = load_absorption_override(a.absorption_file);

    LinkConfig link = figure_link_for_carrier(FrequencyHz(parse_frequency_hz(a.carrier)),
                                              absorption ? &*absorption : nullptr);
    link.n_tx_elements = a.bs_elems;
    link.n_rx_elements = a.ue_elems;

    SweepTable::Series p_series{"coverage_probability", {}};
    SweepTable::Series ci_series{"ci_half_width_95", {}};
    for (std::size_t i = 0; i < densities.size(); ++i) {
        const DeploymentConfig cfg = make_deployment_config(densities[i], link, a.threshold_db);
        const CoverageEstimate est =
            coverage_probability(cfg, a.trials, sweep_point_seed(a.seed, 0, i), a.threads);
        p_series.y.push_back(est.p_hat);
        ci_series.y.push_back(est.ci_half_width_95);
    }
    return SweepTable("density_per_km2", densities,
                      {std::move(p_series), std::move(ci_series)});
}

} // namespace

double parse_frequency_hz(const std::string& text)
{
    if (text.empty()) {
        throw config_error("empty frequency");
    }
    double v = 0.0;
    auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc() || !std::isfinite(v)) {
        throw config_error("invalid frequency: '" + text + "'");
    }
    if (res.ptr != text.data() + text.size()) {
        if (res.ptr + 1 != text.data() + text.size()) {
            throw config_error("invalid frequency: '" + text + "'");
        }
        switch (*res.ptr) {
        case 'k': v *= 1e3; break;
        case 'M': v *= 1e6; break;
        case 'G': v *= 1e9; break;
        case 'T': v *= 1e12; break;
        default:
            throw config_error("invalid frequency suffix in '" + text +
                               "' (accepted: k, M, G, T)");
        }
    }
    return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"RF propagation losses, terahertz link budgets and coverage simulation"};
    app.require_subcommand(1);

    FsplArgs fspl_args;
    auto* fspl_cmd = app.add_subcommand("fspl", "Free-space path loss over a frequency sweep");
    fspl_cmd->add_option("--f-min", fspl_args.f_min, "Sweep start (Hz; k/M/G/T suffixes)")
        ->capture_default_str();
    fspl_cmd->add_option("--f-max", fspl_args.f_max, "Sweep stop")->capture_default_str();
    fspl_cmd->add_option("--ranges", fspl_args.ranges, "Comma list of ranges, m")
        ->capture_default_str();
    fspl_cmd->add_option("--points", fspl_args.points, "Sweep points")->capture_default_str();
    add_output_flags(fspl_cmd, fspl_args.out);

    RainArgs rain_args;
    auto* rain_cmd = app.add_subcommand("rain", "Rain attenuation (ITU and Crane global models)");
    rain_cmd->add_option("--model", rain_args.model, "Rain model")
        ->check(CLI::IsMember({"itu", "crane", "both"}))
        ->capture_default_str();
    rain_cmd->add_option("--rates", rain_args.rates, "Comma list of rain rates, mm/h")
        ->capture_default_str();
    rain_cmd->add_option("--distance", rain_args.distance_m, "Path length, m")
        ->capture_default_str();
    rain_cmd->add_option("--polarization", rain_args.polarization, "Polarization")
        ->check(CLI::IsMember({"h", "v"}))
        ->capture_default_str();
    rain_cmd->add_option("--elevation", rain_args.elevation_deg, "Path elevation, deg")
        ->capture_default_str();
    rain_cmd->add_option("--points", rain_args.points, "Sweep points")->capture_default_str();
    add_output_flags(rain_cmd, rain_args.out);

    FogArgs fog_args;
    auto* fog_cmd = app.add_subcommand("fog", "Fog attenuation (double-Debye model)");
    fog_cmd->add_option("--densities", fog_args.densities, "Comma list of water densities, g/m^3")
        ->capture_default_str();
    fog_cmd->add_option("--temperature", fog_args.temperature_c, "Air temperature, C")
        ->capture_default_str();
    fog_cmd->add_option("--distance", fog_args.distance_m, "Path length, m")
        ->capture_default_str();
    fog_cmd->add_option("--points", fog_args.points, "Sweep points")->capture_default_str();
    add_output_flags(fog_cmd, fog_args.out);

    SnrArgs snr_args;
    auto* snr_cmd = app.add_subcommand("snr", "Link SNR across carriers and distances");
    snr_cmd->add_option("--band", snr_args.band, "Carrier band preset")
        ->check(CLI::IsMember({"mmwave", "thz", "custom"}))
        ->capture_default_str();
    snr_cmd->add_option("--carriers", snr_args.carriers, "Comma list of carriers, Hz");
    snr_cmd->add_option("--distances", snr_args.distances, "Comma list of distances, m")
        ->capture_default_str();
    snr_cmd->add_option("--bandwidth", snr_args.bandwidth,
                        "Noise bandwidth, Hz (default: 400 MHz at or below 100 GHz, 50 GHz above)");
    snr_cmd->add_option("--tx-power", snr_args.tx_power_w, "Transmit power, W")
        ->capture_default_str();
    snr_cmd->add_option("--noise-figure", snr_args.noise_figure_db, "Noise figure, dB")
        ->capture_default_str();
    snr_cmd->add_flag("--beamforming", snr_args.beamforming, "Include the aggregate array gain");
    snr_cmd->add_option("--bs-elems", snr_args.bs_elems, "Base-station antenna elements")
        ->capture_default_str();
    snr_cmd->add_option("--ue-elems", snr_args.ue_elems, "Device antenna elements")
        ->capture_default_str();
    snr_cmd->add_option("--absorption-file", snr_args.absorption_file,
                        "Absorption CSV overriding the bundled table");
    add_output_flags(snr_cmd, snr_args.out);

    CoverageArgs cov_args;
    auto* cov_cmd = app.add_subcommand("coverage", "PPP coverage probability vs density");
    cov_cmd->add_option("--carrier", cov_args.carrier, "Carrier, Hz")->capture_default_str();
    cov_cmd->add_option("--bs-elems", cov_args.bs_elems, "Base-station antenna elements")
        ->capture_default_str();
    cov_cmd->add_option("--ue-elems", cov_args.ue_elems, "Device antenna elements")
        ->capture_default_str();
    cov_cmd->add_option("--densities", cov_args.densities, "Comma list of densities, per km^2")
        ->capture_default_str();
    cov_cmd->add_option("--threshold", cov_args.threshold_db, "SNR threshold, dB")
        ->capture_default_str();
    cov_cmd->add_option("--trials", cov_args.trials, "Monte Carlo trials")->capture_default_str();
    cov_cmd->add_option("--seed", cov_args.seed, "RNG seed")->capture_default_str();
    cov_cmd->add_option("--threads", cov_args.threads, "Worker threads (0 = auto)")
        ->capture_default_str();
    cov_cmd->add_option("--absorption-file", cov_args.absorption_file,
                        "Absorption CSV overriding the bundled table");
    add_output_flags(cov_cmd, cov_args.out);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("thzprop");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (fspl_cmd->parsed()) {
            fspl_args.out.svg = {"Free-space path loss", "path loss (dB)", true, false, 860, 520};
            emit(run_fspl(fspl_args), fspl_args.out, out);
        } else if (rain_cmd->parsed()) {
            rain_args.out.svg = {"Rain attenuation at " + shortest(rain_args.distance_m) + " m",
                                 "attenuation (dB)", true, true, 860, 520};
            emit(run_rain(rain_args), rain_args.out, out);
        } else if (fog_cmd->parsed()) {
            fog_args.out.svg = {"Fog attenuation at " + shortest(fog_args.distance_m) + " m",
                                "attenuation (dB)", true, true, 860, 520};
            emit(run_fog(fog_args), fog_args.out, out);
        } else if (snr_cmd->parsed()) {
            snr_args.out.svg = {"Link SNR", "SNR (dB)", true, false, 860, 520};
            emit(run_snr(snr_args), snr_args.out, out);
        } else if (cov_cmd->parsed()) {
            cov_args.out.svg = {"Coverage probability", "P(SNR >= threshold)", true, false, 860,
                                520};
            emit(run_coverage(cov_args), cov_args.out, out);
        }
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const numeric_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

} // namespace thzprop::cli
