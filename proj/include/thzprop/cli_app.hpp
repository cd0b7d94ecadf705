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

#ifndef THZPROP_CLI_APP_HPP
#define THZPROP_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace thzprop::cli {

// Exit codes: 0 success, 2 usage/validation error, 3 numeric failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

// Frequency in Hz from decimal/scientific notation with an optional k/M/G/T
// suffix ("40e9", "40G", "2.5T").
double parse_frequency_hz(const std::string& text);

// Runs the command line (argv without the program name). Output goes to
// `out` unless --out redirects it to a file; diagnostics go to `err` as a
// single line. Identical arguments (including --seed) produce identical
// bytes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace thzprop::cli

#endif // THZPROP_CLI_APP_HPP
