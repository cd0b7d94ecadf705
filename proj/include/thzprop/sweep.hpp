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

#ifndef THZPROP_SWEEP_HPP
#define THZPROP_SWEEP_HPP

#include <string>
#include <vector>

namespace thzprop {

// Labeled grid of (x, series...) values backing every figure-style output.
class SweepTable {
public:
    struct Series {
        std::string label;
        std::vector<double> y;

        bool operator==(const Series& other) const = default;
    };

    SweepTable(std::string x_label, std::vector<double> x, std::vector<Series> series);

    const std::string& x_label() const { return x_label_; }
    const std::vector<double>& x() const { return x_; }
    const std::vector<Series>& series() const { return series_; }

    bool operator==(const SweepTable& other) const = default;

private:
    std::string x_label_;
    std::vector<double> x_;
    std::vector<Series> series_;
};

} // namespace thzprop

#endif // THZPROP_SWEEP_HPP
