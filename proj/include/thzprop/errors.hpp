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

#ifndef THZPROP_ERRORS_HPP
#define THZPROP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace thzprop {

// Input lies outside the published validity range of a model.
class model_validity_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Query outside the span of a sampled table; extrapolation is refused.
class interpolation_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed input data (CSV and friends); message names the line.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inconsistent simulation or run configuration.
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numeric procedure failed to converge or bracket.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace thzprop

#endif // THZPROP_ERRORS_HPP
