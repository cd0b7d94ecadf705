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

#include "thzprop/channel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "default_absorption_data.hpp"
#include "thzprop/errors.hpp"
#include "thzprop/propagation.hpp"

namespace thzprop {

namespace {

constexpr std::string_view kAbsorptionHeader = "frequency_ghz,k_per_m";

// 10*log10(e): converts a natural-units exponential attenuation k*d to dB.
constexpr double kDbPerNeper = 4.342944819032518;

std::string format_double(double v)
{
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_field(std::string_view field, std::size_t line_no, const char* what)
{
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
        throw parse_error("malformed " + std::string(what) + " at line " + std::to_string(line_no));
    }
    return v;
}

} // namespace

AbsorptionTable::AbsorptionTable(std::vector<Sample> samples) : samples_(std::move(samples))
{
    if (samples_.size() < 2) {
        throw std::invalid_argument("absorption table needs at least 2 samples");
    }
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Sample& s = samples_[i];
        if (!std::isfinite(s.frequency_hz) || s.frequency_hz <= 0.0) {
            throw std::invalid_argument("absorption sample " + std::to_string(i) +
                                        " has a non-positive frequency");
        }
        if (!std::isfinite(s.k_per_m) || s.k_per_m < 0.0) {
            throw std::invalid_argument("absorption sample " + std::to_string(i) +
                                        " has a negative coefficient");
        }
        if (i > 0 && s.frequency_hz <= samples_[i - 1].frequency_hz) {
            throw std::invalid_argument("absorption frequencies must be strictly increasing");
        }
    }
}

double AbsorptionTable::k_at(FrequencyHz f) const
{
    const double fq = f.hz();
    if (fq < min_frequency_hz() || fq > max_frequency_hz()) {
        throw interpolation_error("frequency " + std::to_string(fq * 1e-9) +
                                  " GHz outside absorption table span [" +
                                  std::to_string(min_frequency_hz() * 1e-9) + ", " +
                                  std::to_string(max_frequency_hz() * 1e-9) + "] GHz");
    }
    const auto upper = std::lower_bound(
        samples_.begin(), samples_.end(), fq,
        [](const Sample& s, double value) { return s.frequency_hz < value; });
    if (upper->frequency_hz == fq) {
        return upper->k_per_m;
    }
    const auto lower = upper - 1;
    const double t = (fq - lower->frequency_hz) / (upper->frequency_hz - lower->frequency_hz);
    return std::lerp(lower->k_per_m, upper->k_per_m, t);
}

AbsorptionTable load_absorption_table(std::istream& source)
{
    std::vector<AbsorptionTable::Sample> samples;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    double prev_ghz = 0.0;

    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != kAbsorptionHeader) {
                throw parse_error("expected header '" + std::string(kAbsorptionHeader) +
                                  "' at line " + std::to_string(line_no));
            }
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw parse_error("expected two comma-separated fields at line " +
                              std::to_string(line_no));
        }
        const double ghz =
            parse_field(std::string_view(line).substr(0, comma), line_no, "frequency");
        const double k =
            parse_field(std::string_view(line).substr(comma + 1), line_no, "coefficient");
        if (ghz <= 0.0) {
            throw parse_error("non-positive frequency at line " + std::to_string(line_no));
        }
        if (!samples.empty() && ghz <= prev_ghz) {
            throw parse_error("non-monotone frequency at line " + std::to_string(line_no));
        }
        if (k < 0.0) {
            throw parse_error("negative absorption coefficient at line " +
                              std::to_string(line_no));
        }
        samples.push_back({ghz * 1e9, k});
        prev_ghz = ghz;
    }
    if (!header_seen) {
        throw parse_error("empty absorption table: missing header");
    }
    if (samples.size() < 2) {
        throw parse_error("absorption table needs at least 2 samples");
    }
    return AbsorptionTable(std::move(samples));
}

void save_absorption_table(const AbsorptionTable& table, std::ostream& out)
{
    out << kAbsorptionHeader << '\n';
    for (const auto& s : table.samples()) {
        out << format_double(s.frequency_hz / 1e9) << ',' << format_double(s.k_per_m) << '\n';
    }
}

const AbsorptionTable& default_absorption_table()
{
    static const AbsorptionTable table = [] {
        std::istringstream in{std::string(detail::kDefaultAbsorptionCsv)};
        return load_absorption_table(in);
    }();
    return table;
}

double umi_los_pathloss_db(FrequencyHz f, DistanceM d)
{
    if (f.hz() < 0.5e9 || f.hz() > 100e9) {
        throw model_validity_error("UMi-LOS model is valid for 0.5..100 GHz, got " +
                                   std::to_string(f.ghz()) + " GHz");
    }
    if (d.m() < 1.0) {
        throw model_validity_error("UMi-LOS model requires distances >= 1 m, got " +
                                   std::to_string(d.m()) + " m");
    }
    return 32.4 + 21.0 * std::log10(d.m()) + 20.0 * std::log10(f.ghz());
}

double thz_pathloss_db(FrequencyHz f, DistanceM d, const AbsorptionTable* absorption)
{
    const double spreading = fspl_db(f, d);
    if (absorption == nullptr) {
        return spreading;
    }
    return spreading + kDbPerNeper * absorption->k_at(f) * d.m();
}

double pathloss_db(const PathLossModel& model, FrequencyHz f, DistanceM d)
{
    return std::visit(
        [&](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, FreeSpace>) {
                return fspl_db(f, d);
            } else if constexpr (std::is_same_v<T, UrbanCanyonLos>) {
                return umi_los_pathloss_db(f, d);
            } else {
                return thz_pathloss_db(f, d, m.absorption ? &*m.absorption : nullptr);
            }
        },
        model);
}

} // namespace thzprop
