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

#include "thzprop/sweep.hpp"

#include <stdexcept>

namespace thzprop {

SweepTable::SweepTable(std::string x_label, std::vector<double> x, std::vector<Series> series)
    : x_label_(std::move(x_label)), x_(std::move(x)), series_(std::move(series))
{
    if (x_.empty()) {
        throw std::invalid_argument("sweep table must have at least one x value");
    }
    for (std::size_t i = 1; i < x_.size(); ++i) {
        if (x_[i] <= x_[i - 1]) {
            throw std::invalid_argument("sweep table x values must be strictly increasing");
        }
    }
    for (const auto& s : series_) {
        if (s.y.size() != x_.size()) {
            throw std::invalid_argument("series '" + s.label + "' length " +
                                        std::to_string(s.y.size()) + " does not match x length " +
                                        std::to_string(x_.size()));
        }
    }
}

} // namespace thzprop
