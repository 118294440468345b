// SPDX-License-Identifier: Apache-2.0
//
// scsim - spatially consistent statistical mmWave channel simulator
// Copyright (C) 2026 scsim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "scsim/config.hpp"

using namespace scsim;

namespace
{

SimulationConfig seeded_defaults()
{
    SimulationConfig c;
    c.rng_seed = 1;
    c.rng_seed_set = true;
    return c;
}

bool has_violation(const std::vector<ConfigViolation>& v, const std::string& field)
{
    return std::any_of(v.begin(), v.end(),
                       [&field](const ConfigViolation& x) { return x.field == field; });
}

} // namespace

TEST_CASE("defaults with a seed are valid")
{
    CHECK(validate_config(seeded_defaults()).empty());
}

TEST_CASE("update distance of 0.25 m is accepted")
{
    SimulationConfig c = seeded_defaults();
    c.update_distance_m = 0.25;
    CHECK(validate_config(c).empty());
}

TEST_CASE("update distance above 1 m is rejected")
{
    SimulationConfig c = seeded_defaults();
    c.update_distance_m = 1.5;
    const auto v = validate_config(c);
    REQUIRE_FALSE(v.empty());
    CHECK(has_violation(v, "track.update_distance_m"));
}

TEST_CASE("zero track length is rejected")
{
    SimulationConfig c = seeded_defaults();
    c.track_length_m = 0.0;
    CHECK(has_violation(validate_config(c), "track.track_length_m"));
}

TEST_CASE("every violated constraint is reported, not just the first")
{
    SimulationConfig c = seeded_defaults();
    c.update_distance_m = 2.0;
    c.ut_speed_mps = -1.0;
    c.carrier_frequency_hz = 500e9;
    const auto v = validate_config(c);
    CHECK(v.size() >= 3);
    CHECK(has_violation(v, "track.update_distance_m"));
    CHECK(has_violation(v, "track.ut_speed_mps"));
    CHECK(has_violation(v, "scenario.carrier_frequency_hz"));
}

TEST_CASE("missing seed is a violation")
{
    SimulationConfig c;
    CHECK(has_violation(validate_config(c), "run.rng_seed"));
}

TEST_CASE("half-hexagon track must fit the T-R separation")
{
    SimulationConfig c = seeded_defaults();
    c.tr_separation_2d_m = 5.0;
    c.track_length_m = 20.0; // side 6.67 m > 5 m separation
    CHECK(has_violation(validate_config(c), "scenario.tr_separation_2d_m"));
}

TEST_CASE("explicit map extent must cover track and margin")
{
    SimulationConfig c = seeded_defaults();
    c.map_extent_x_m = 30.0;
    c.map_extent_y_m = 30.0; // default LOS correlation distance alone is 50 m
    CHECK(has_violation(validate_config(c), "field.map_extent"));
}

TEST_CASE("require_valid aggregates violations into the error")
{
    SimulationConfig c = seeded_defaults();
    c.update_distance_m = 1.5;
    c.track_length_m = -2.0;
    try
    {
        require_valid(c);
        FAIL("expected ConfigError");
    }
    catch (const ConfigError& e)
    {
        CHECK(e.violations().size() >= 2);
    }
}

TEST_CASE("config file round trip")
{
    const char* path = "scsim_test_config.ini";
    {
        std::ofstream out(path);
        out << "# comment line\n"
            << "[scenario]\n"
            << "carrier_frequency_hz = 28e9\n"
            << "scenario = uma\n"
            << "[track]\n"
            << "shape = linear\n"
            << "heading_rad = 0.5\n"
            << "update_distance_m = 0.5 ; trailing comment\n"
            << "[run]\n"
            << "rng_seed = 12345\n";
    }
    const SimulationConfig c = load_config_file(path);
    std::remove(path);
    CHECK(c.carrier_frequency_hz == doctest::Approx(28e9));
    CHECK(c.scenario == Scenario::UMa);
    CHECK(c.track == TrackShape::Linear);
    CHECK(c.track_heading_rad == doctest::Approx(0.5));
    CHECK(c.update_distance_m == doctest::Approx(0.5));
    CHECK(c.rng_seed == 12345);
    CHECK(c.rng_seed_set);
    // untouched keys keep their defaults
    CHECK(c.tr_separation_2d_m == doctest::Approx(50.0));
}

TEST_CASE("unknown config keys are rejected")
{
    const char* path = "scsim_test_config_bad.ini";
    {
        std::ofstream out(path);
        out << "[track]\nspeed_of_light = 3e8\n";
    }
    CHECK_THROWS_AS(load_config_file(path), ConfigError);
    std::remove(path);
}

TEST_CASE("overrides set single keys")
{
    SimulationConfig c = seeded_defaults();
    apply_override(c, "pathloss.exponent_nlos=3.5");
    CHECK(c.exponent_nlos == doctest::Approx(3.5));
    apply_override(c, "field.los_mode=force_los");
    CHECK(c.los_mode == LosMode::ForceLos);
    CHECK_THROWS_AS(apply_override(c, "nonsense.key=1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_override(c, "no-equals-sign"), std::invalid_argument);
}

TEST_CASE("json round trip preserves every key")
{
    SimulationConfig c = seeded_defaults();
    c.carrier_frequency_hz = 28e9;
    c.scenario = Scenario::RMa;
    c.track = TrackShape::Linear;
    c.hexagon_turn = TurnDirection::Right;
    c.los_mode = LosMode::ForceNlos;
    c.ut_speed_mps = 1.25;
    c.max_clusters = 4;
    c.sigma_u_db = 2.5;
    c.write_maps = true;
    c.rng_seed = 987654321;

    const SimulationConfig back = config_from_json(config_to_json(c));
    CHECK(back.carrier_frequency_hz == c.carrier_frequency_hz);
    CHECK(back.scenario == c.scenario);
    CHECK(back.track == c.track);
    CHECK(back.hexagon_turn == c.hexagon_turn);
    CHECK(back.los_mode == c.los_mode);
    CHECK(back.ut_speed_mps == c.ut_speed_mps);
    CHECK(back.max_clusters == c.max_clusters);
    CHECK(back.sigma_u_db == c.sigma_u_db);
    CHECK(back.write_maps == c.write_maps);
    CHECK(back.rng_seed == c.rng_seed);
    CHECK(back.rng_seed_set);
}
