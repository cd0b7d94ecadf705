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

// Reproducible random variates. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; every distribution mapping is
// written out explicitly here (std:: distribution classes are
// implementation-defined), so identical seeds give identical results on any
// platform. Per-trial substreams are derived by splitmix64-mixing the
// (seed, stream index) pair, which makes trial-parallel runs bit-identical
// to sequential ones.

#ifndef THZPROP_RNG_HPP
#define THZPROP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace thzprop::rng {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Independent engine for substream `stream` of master seed `seed`.
inline std::mt19937_64 substream_engine(std::uint64_t seed, std::uint64_t stream)
{
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(stream)));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& eng)
{
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Exp(1) variate; finite for every engine output.
inline double exponential1(std::mt19937_64& eng)
{
    return -std::log1p(-uniform01(eng));
}

// Poisson count by accumulating Exp(1) arrival gaps until they exceed the
// mean. O(mean) draws, numerically safe for large means.
inline std::uint64_t poisson_count(double mean, std::mt19937_64& eng)
{
    if (!(mean > 0.0)) {
        return 0;
    }
    std::uint64_t n = 0;
    double acc = exponential1(eng);
    while (acc <= mean) {
        ++n;
        acc += exponential1(eng);
    }
    return n;
}

} // namespace thzprop::rng

#endif // THZPROP_RNG_HPP
