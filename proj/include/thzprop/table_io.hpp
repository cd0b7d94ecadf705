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

// CSV and SVG emission for sweep tables. CSV uses shortest round-trip
// decimals, '.' separator and LF endings, so emitted files re-parse to the
// exact same table. The SVG is a small self-contained line chart.

#ifndef THZPROP_TABLE_IO_HPP
#define THZPROP_TABLE_IO_HPP

#include <iosfwd>
#include <string>

#include "thzprop/sweep.hpp"

namespace thzprop {

std::string to_csv(const SweepTable& table);

// Parses a file produced by to_csv back into the identical table.
SweepTable sweep_from_csv(std::istream& source);

struct SvgOptions {
    std::string title;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    int width = 860;
    int height = 520;
};

std::string to_svg(const SweepTable& table, const SvgOptions& options);

} // namespace thzprop

#endif // THZPROP_TABLE_IO_HPP
