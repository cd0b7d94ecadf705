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

// Carrier-dependent end-to-end path-loss models: TR 38.901 UMi street-canyon
// LOS for the sub-100 GHz range and spreading-plus-molecular-absorption for
// the terahertz range, with CSV ingestion of absorption coefficients.

#ifndef THZPROP_CHANNEL_HPP
#define THZPROP_CHANNEL_HPP

#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "thzprop/units.hpp"

namespace thzprop {

// Sampled molecular absorption coefficient k(f), 1/m, strictly increasing in
// frequency. Queries are linearly interpolated; extrapolation is refused.
class AbsorptionTable {
public:
    struct Sample {
        double frequency_hz;
        double k_per_m;
    };

    explicit AbsorptionTable(std::vector<Sample> samples);

    double k_at(FrequencyHz f) const;

    double min_frequency_hz() const { return samples_.front().frequency_hz; }
    double max_frequency_hz() const { return samples_.back().frequency_hz; }
    const std::vector<Sample>& samples() const { return samples_; }

private:
    std::vector<Sample> samples_;
};

// Parses the absorption CSV format: optional leading '#' comment lines, a
// `frequency_ghz,k_per_m` header, then one sample per line. Throws
// parse_error naming the offending line.
AbsorptionTable load_absorption_table(std::istream& source);

// Canonical serialization (header + shortest round-trip decimals, LF).
void save_absorption_table(const AbsorptionTable& table, std::ostream& out);

// The bundled sea-level table (embedded at build time from data/).
const AbsorptionTable& default_absorption_table();

struct FreeSpace {};
struct UrbanCanyonLos {};
struct Thz {
    std::optional<AbsorptionTable> absorption; // nullopt: spreading loss only
};

using PathLossModel = std::variant<FreeSpace, UrbanCanyonLos, Thz>;

// TR 38.901 UMi street-canyon LOS, below-breakpoint branch:
// 32.4 + 21*log10(d_m) + 20*log10(f_GHz) dB. Accepted for 0.5..100 GHz and
// d >= 1 m; the formula is applied as-is below the 10 m validity floor.
double umi_los_pathloss_db(FrequencyHz f, DistanceM d);

// Terahertz path loss: spreading 20*log10(4*pi*d*f/c) plus molecular
// absorption 10*log10(e)*k(f)*d. Null table means k = 0.
double thz_pathloss_db(FrequencyHz f, DistanceM d, const AbsorptionTable* absorption);

// Dispatch across the three models.
double pathloss_db(const PathLossModel& model, FrequencyHz f, DistanceM d);

} // namespace thzprop

#endif // THZPROP_CHANNEL_HPP
