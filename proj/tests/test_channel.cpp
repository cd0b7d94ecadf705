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

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <doctest.h>

#include "thzprop/errors.hpp"
#include "thzprop/propagation.hpp"

using namespace thzprop;

namespace {

AbsorptionTable make_table(std::initializer_list<AbsorptionTable::Sample> samples)
{
    return AbsorptionTable(std::vector<AbsorptionTable::Sample>(samples));
}

} // namespace

TEST_CASE("umi los pathloss anchors")
{
    // 32.4 + 21*log10(d) + 20*log10(f_GHz), evaluated directly.
    CHECK(umi_los_pathloss_db(FrequencyHz(40e9), DistanceM(100)) ==
          doctest::Approx(106.44119982655926).epsilon(1e-12));
    CHECK(umi_los_pathloss_db(FrequencyHz(28e9), DistanceM(10)) ==
          doctest::Approx(82.34316062684438).epsilon(1e-12));

    // +21 dB per distance decade.
    for (double d : {1.0, 5.0, 40.0}) {
        const double step = umi_los_pathloss_db(FrequencyHz(28e9), DistanceM(10 * d)) -
                            umi_los_pathloss_db(FrequencyHz(28e9), DistanceM(d));
        CHECK(std::fabs(step - 21.0) < 1e-9);
    }
}

TEST_CASE("umi los pathloss validity range")
{
    CHECK_THROWS_AS(umi_los_pathloss_db(FrequencyHz(0.4e9), DistanceM(10)), model_validity_error);
    CHECK_THROWS_AS(umi_los_pathloss_db(FrequencyHz(101e9), DistanceM(10)), model_validity_error);
    CHECK_THROWS_AS(umi_los_pathloss_db(FrequencyHz(28e9), DistanceM(0.5)), model_validity_error);
    CHECK_NOTHROW(umi_los_pathloss_db(FrequencyHz(28e9), DistanceM(5))); // below the 10 m floor
}

TEST_CASE("thz pathloss reduces to spreading loss without absorption")
{
    CHECK(thz_pathloss_db(FrequencyHz(300e9), DistanceM(10), nullptr) ==
          doctest::Approx(101.99020831627662).epsilon(1e-12));
    CHECK(thz_pathloss_db(FrequencyHz(700e9), DistanceM(5), nullptr) ==
          doctest::Approx(103.32914410888888).epsilon(1e-12));
    for (double f : {300e9, 700e9, 1e12}) {
        CHECK(thz_pathloss_db(FrequencyHz(f), DistanceM(42), nullptr) ==
              fspl_db(FrequencyHz(f), DistanceM(42)));
    }
}

TEST_CASE("thz pathloss adds the exponential absorption term")
{
    const auto flat = make_table({{100e9, 0.001}, {2e12, 0.001}});
    const double spreading = fspl_db(FrequencyHz(700e9), DistanceM(100));
    const double with_abs = thz_pathloss_db(FrequencyHz(700e9), DistanceM(100), &flat);
    // 10*log10(e) * 0.001 * 100
    CHECK(with_abs - spreading == doctest::Approx(0.43429448190325187).epsilon(1e-12));

    // Absorption can only add loss; zero coefficient is the equality case.
    const auto zero = make_table({{100e9, 0.0}, {2e12, 0.0}});
    CHECK(thz_pathloss_db(FrequencyHz(700e9), DistanceM(100), &zero) == spreading);
    const auto& def = default_absorption_table();
    for (double f : {300e9, 500e9, 700e9, 1e12}) {
        CHECK(thz_pathloss_db(FrequencyHz(f), DistanceM(25), &def) >=
              thz_pathloss_db(FrequencyHz(f), DistanceM(25), nullptr));
    }
}

TEST_CASE("absorption interpolation is exact at samples and bracketed between")
{
    const auto table = make_table({{100e9, 0.002}, {200e9, 0.01}, {400e9, 0.004}});
    for (const auto& s : table.samples()) {
        CHECK(table.k_at(FrequencyHz(s.frequency_hz)) == s.k_per_m);
    }

    std::mt19937_64 eng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double f = 100e9 + u(eng) * 300e9;
        const double k = table.k_at(FrequencyHz(f));
        const double lo = f <= 200e9 ? 0.002 : 0.004;
        const double hi = 0.01;
        CHECK(k >= lo);
        CHECK(k <= hi);
    }

    CHECK_THROWS_AS(table.k_at(FrequencyHz(99e9)), interpolation_error);
    CHECK_THROWS_AS(table.k_at(FrequencyHz(401e9)), interpolation_error);
}

TEST_CASE("absorption table construction validates invariants")
{
    CHECK_THROWS_AS(make_table({{100e9, 0.1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_table({{100e9, 0.1}, {100e9, 0.2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_table({{200e9, 0.1}, {100e9, 0.2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_table({{100e9, -0.1}, {200e9, 0.2}}), std::invalid_argument);
}

TEST_CASE("absorption csv parses minimal and rejects malformed input")
{
    std::istringstream ok("frequency_ghz,k_per_m\n100,0.001\n200,0.002\n");
    const auto table = load_absorption_table(ok);
    REQUIRE(table.samples().size() == 2);
    CHECK(table.samples()[0].frequency_hz == 100e9);
    CHECK(table.samples()[1].k_per_m == 0.002);

    std::istringstream crlf("frequency_ghz,k_per_m\r\n100,0.001\r\n200,0.002\r\n");
    CHECK(load_absorption_table(crlf).samples().size() == 2);

    std::istringstream descending("frequency_ghz,k_per_m\n200,0.001\n100,0.002\n");
    CHECK_THROWS_WITH_AS(load_absorption_table(descending),
                         "non-monotone frequency at line 3", parse_error);

    std::istringstream negative("frequency_ghz,k_per_m\n100,0.001\n200,-0.002\n");
    CHECK_THROWS_WITH_AS(load_absorption_table(negative),
                         "negative absorption coefficient at line 3", parse_error);

    std::istringstream bad_header("freq,k\n100,0.001\n");
    CHECK_THROWS_AS(load_absorption_table(bad_header), parse_error);

    std::istringstream bad_number("frequency_ghz,k_per_m\n100,zero\n200,0.1\n");
    CHECK_THROWS_WITH_AS(load_absorption_table(bad_number),
                         "malformed coefficient at line 2", parse_error);

    std::istringstream too_few("frequency_ghz,k_per_m\n100,0.001\n");
    CHECK_THROWS_AS(load_absorption_table(too_few), parse_error);

    std::istringstream empty("");
    CHECK_THROWS_AS(load_absorption_table(empty), parse_error);
}

TEST_CASE("absorption csv round-trips bit-identically")
{
    const std::string canonical = "frequency_ghz,k_per_m\n100,0.001\n118.75,0.0025\n"
                                  "200.5,0.0075\n1000,0.12\n2000,1.5\n";
    std::istringstream in(canonical);
    const auto table = load_absorption_table(in);
    std::ostringstream out;
    save_absorption_table(table, out);
    CHECK(out.str() == canonical);

    // Random shortest-representation tables re-serialize to a fixpoint.
    std::mt19937_64 eng(9);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        std::vector<AbsorptionTable::Sample> samples;
        double f = 50e9;
        for (int j = 0; j < 20; ++j) {
            f += 1e9 + u(eng) * 50e9;
            samples.push_back({f, u(eng) * 2.0});
        }
        std::ostringstream first;
        save_absorption_table(AbsorptionTable(samples), first);
        std::istringstream back(first.str());
        std::ostringstream second;
        save_absorption_table(load_absorption_table(back), second);
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("bundled absorption table loads and spans the terahertz range")
{
    const auto& table = default_absorption_table();
    CHECK(table.min_frequency_hz() <= 100e9);
    CHECK(table.max_frequency_hz() >= 2e12);
    for (const auto& s : table.samples()) {
        CHECK(s.k_per_m >= 0.0);
    }

    // Serialize/parse fixpoint for the bundled data as well.
    std::ostringstream first;
    save_absorption_table(table, first);
    std::istringstream back(first.str());
    std::ostringstream second;
    save_absorption_table(load_absorption_table(back), second);
    CHECK(first.str() == second.str());
}

TEST_CASE("pathloss dispatch matches the underlying models")
{
    const PathLossModel free_space = FreeSpace{};
    const PathLossModel umi = UrbanCanyonLos{};
    const PathLossModel thz_bare = Thz{};
    const PathLossModel thz_default = Thz{default_absorption_table()};

    CHECK(pathloss_db(free_space, FrequencyHz(1e9), DistanceM(1000)) ==
          doctest::Approx(92.44778322188337).epsilon(1e-12));
    CHECK(pathloss_db(umi, FrequencyHz(40e9), DistanceM(100)) ==
          doctest::Approx(106.44119982655926).epsilon(1e-12));
    CHECK(pathloss_db(thz_bare, FrequencyHz(700e9), DistanceM(5)) ==
          pathloss_db(free_space, FrequencyHz(700e9), DistanceM(5)));
    CHECK(pathloss_db(thz_default, FrequencyHz(700e9), DistanceM(5)) >
          pathloss_db(thz_bare, FrequencyHz(700e9), DistanceM(5)));
}

TEST_CASE("all models are strictly increasing in distance")
{
    const std::vector<std::pair<PathLossModel, double>> cases = {
        {FreeSpace{}, 10e9},
        {UrbanCanyonLos{}, 40e9},
        {Thz{}, 400e9},
        {Thz{default_absorption_table()}, 400e9},
    };
    for (const auto& [model, f] : cases) {
        double prev = pathloss_db(model, FrequencyHz(f), DistanceM(1.0));
        for (double d = 1.5; d < 5000; d *= 1.5) {
            const double cur = pathloss_db(model, FrequencyHz(f), DistanceM(d));
            CHECK(cur > prev);
            prev = cur;
        }
    }

    // Frequency monotonicity for the closed-form models.
    double prev_fs = pathloss_db(FreeSpace{}, FrequencyHz(1e9), DistanceM(100));
    double prev_umi = pathloss_db(UrbanCanyonLos{}, FrequencyHz(1e9), DistanceM(100));
    for (double f = 2e9; f <= 100e9; f *= 1.3) {
        const double fs = pathloss_db(FreeSpace{}, FrequencyHz(f), DistanceM(100));
        const double umi = pathloss_db(UrbanCanyonLos{}, FrequencyHz(f), DistanceM(100));
        CHECK(fs > prev_fs);
        CHECK(umi > prev_umi);
        prev_fs = fs;
        prev_umi = umi;
    }
}
