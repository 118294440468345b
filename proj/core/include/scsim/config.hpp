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

#ifndef SCSIM_CONFIG_HPP
#define SCSIM_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "scsim/errors.hpp"
#include "scsim/geometry.hpp"

namespace scsim
{

enum class Scenario
{
    UMi,
    UMa,
    RMa,
};

enum class TrackShape
{
    Linear,
    HalfHexagon,
};

enum class TurnDirection
{
    Left,
    Right,
};

// How the LOS/NLOS condition is obtained along the track.
enum class LosMode
{
    Auto,     // sampled from the correlated LOS condition field
    ForceLos,
    ForceNlos,
};

// All tunables of one simulation run. The base station sits at the origin of
// the horizontal plane; the terminal starts at (tr_separation_2d_m, 0).
// Every key has a default except rng_seed, which must come from the config
// file or the command line.
struct SimulationConfig
{
    // [scenario]
    double carrier_frequency_hz = 73e9; // valid range 0.8 - 100 GHz
    Scenario scenario = Scenario::UMi;
    double tr_separation_2d_m = 50.0;
    double bs_height_m = 10.0;
    double ut_height_m = 1.5;

    // [track]
    double ut_speed_mps = 1.0;
    TrackShape track = TrackShape::HalfHexagon;
    double track_heading_rad = 0.5 * kPi; // linear track only
    TurnDirection hexagon_turn = TurnDirection::Left;
    double track_length_m = 20.0;
    double update_distance_m = 0.25; // must be in (0, 1] m

    // [field]
    double correlation_distance_los_m = 50.0;
    double correlation_distance_sf_m = 15.0;
    double map_extent_x_m = 0.0; // 0 = auto (track + BS + margin)
    double map_extent_y_m = 0.0; // 0 = auto
    double map_resolution_m = 2.0;
    double sf_map_extent_m = 50.0; // grown automatically if the track demands
    LosMode los_mode = LosMode::Auto;

    // [pathloss]
    double exponent_los = 2.0;
    double exponent_nlos = 3.2;
    double sf_sigma_los_db = 4.0;
    double sf_sigma_nlos_db = 7.8;
    double tx_power_dbm = 30.0;

    // [drop]
    int min_clusters = 1;
    int max_clusters = 6;
    int min_subpaths = 1;
    int max_subpaths = 30;
    double mu_tau_los_ns = 123.0;  // mean cluster inter-arrival excess delay, LOS
    double mu_tau_nlos_ns = 83.0;  // mean cluster inter-arrival excess delay, NLOS
    double subpath_delay_spacing_ns = 2.5;
    double cluster_decay_ns = 49.4; // cluster power decay constant
    double subpath_decay_ns = 16.9; // subpath power decay constant
    double sigma_z_db = 3.0;        // cluster shadowing std
    double sigma_u_db = 3.0;        // subpath shadowing std
    double zenith_spread_rad = 0.1; // Laplace scale of drop zenith angles about the horizon

    // [run]
    std::uint64_t rng_seed = 0;
    bool rng_seed_set = false;
    bool write_maps = false;

    Vec2 bs_position() const { return {0.0, 0.0}; }
    Vec2 ut_start() const { return {tr_separation_2d_m, 0.0}; }
    double update_interval_s() const { return update_distance_m / ut_speed_mps; }
};

// Checks every invariant and returns the full list of violations
// (empty means the config is valid).
std::vector<ConfigViolation> validate_config(const SimulationConfig& config);

// Throws ConfigError listing every violation.
void require_valid(const SimulationConfig& config);

// Reads a flat `key = value` config file with one `[section]` per module.
// Unknown sections or keys are reported as violations.
SimulationConfig load_config_file(const std::string& path);

// Applies one `section.key=value` override string.
void apply_override(SimulationConfig& config, const std::string& assignment);

// Serialization used by the run manifest; round-trips exactly.
std::string config_to_json(const SimulationConfig& config);
SimulationConfig config_from_json(const std::string& json_text);

const char* to_string(Scenario s);
const char* to_string(TrackShape t);
const char* to_string(TurnDirection t);
const char* to_string(LosMode m);

} // namespace scsim

#endif
