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

#include "scsim/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "scsim/trajectory.hpp"

namespace scsim
{

namespace
{

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

// Key accessors: each config key has a getter/setter pair on string values so
// that the INI loader, CLI overrides and the manifest all share one table.
struct KeyAccessor
{
    std::function<void(SimulationConfig&, const std::string&)> set;
    std::function<std::string(const SimulationConfig&)> get;
};

double parse_double(const std::string& key, const std::string& v)
{
    std::size_t pos = 0;
    double d = 0.0;
    try
    {
        d = std::stod(v, &pos);
    }
    catch (const std::exception&)
    {
        throw std::invalid_argument("invalid number for " + key + ": '" + v + "'");
    }
    if (pos != v.size())
        throw std::invalid_argument("invalid number for " + key + ": '" + v + "'");
    return d;
}

int parse_int(const std::string& key, const std::string& v)
{
    const double d = parse_double(key, v);
    if (d != std::floor(d))
        throw std::invalid_argument("expected integer for " + key + ": '" + v + "'");
    return static_cast<int>(d);
}

std::uint64_t parse_u64(const std::string& key, const std::string& v)
{
    try
    {
        std::size_t pos = 0;
        const std::uint64_t u = std::stoull(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument("");
        return u;
    }
    catch (const std::exception&)
    {
        throw std::invalid_argument("invalid unsigned integer for " + key + ": '" + v + "'");
    }
}

bool parse_bool(const std::string& key, const std::string& v)
{
    const std::string s = lower(trim(v));
    if (s == "true" || s == "1" || s == "yes" || s == "on")
        return true;
    if (s == "false" || s == "0" || s == "no" || s == "off")
        return false;
    throw std::invalid_argument("invalid boolean for " + key + ": '" + v + "'");
}

std::string fmt_double(double d)
{
    std::ostringstream os;
    os.precision(17);
    os << d;
    return os.str();
}

Scenario parse_scenario(const std::string& v)
{
    const std::string s = lower(trim(v));
    if (s == "umi")
        return Scenario::UMi;
    if (s == "uma")
        return Scenario::UMa;
    if (s == "rma")
        return Scenario::RMa;
    throw std::invalid_argument("unknown scenario '" + v + "' (umi, uma, rma)");
}

TrackShape parse_track(const std::string& v)
{
    const std::string s = lower(trim(v));
    if (s == "linear")
        return TrackShape::Linear;
    if (s == "half_hexagon" || s == "half-hexagon" || s == "halfhexagon")
        return TrackShape::HalfHexagon;
    throw std::invalid_argument("unknown track shape '" + v + "' (linear, half_hexagon)");
}

TurnDirection parse_turn(const std::string& v)
{
    const std::string s = lower(trim(v));
    if (s == "left")
        return TurnDirection::Left;
    if (s == "right")
        return TurnDirection::Right;
    throw std::invalid_argument("unknown turn direction '" + v + "' (left, right)");
}

LosMode parse_los_mode(const std::string& v)
{
    const std::string s = lower(trim(v));
    if (s == "auto")
        return LosMode::Auto;
    if (s == "force_los")
        return LosMode::ForceLos;
    if (s == "force_nlos")
        return LosMode::ForceNlos;
    throw std::invalid_argument("unknown los mode '" + v + "' (auto, force_los, force_nlos)");
}

#define SCSIM_DOUBLE_KEY(section, name, member)                                        \
    {                                                                                  \
        section "." name,                                                              \
        {                                                                              \
            [](SimulationConfig& c, const std::string& v)                              \
            { c.member = parse_double(section "." name, v); },                         \
                [](const SimulationConfig& c) { return fmt_double(c.member); }         \
        }                                                                              \
    }

#define SCSIM_INT_KEY(section, name, member)                                           \
    {                                                                                  \
        section "." name,                                                              \
        {                                                                              \
            [](SimulationConfig& c, const std::string& v)                              \
            { c.member = parse_int(section "." name, v); },                            \
                [](const SimulationConfig& c) { return std::to_string(c.member); }     \
        }                                                                              \
    }

const std::map<std::string, KeyAccessor>& key_table()
{
    static const std::map<std::string, KeyAccessor> table = {
        SCSIM_DOUBLE_KEY("scenario", "carrier_frequency_hz", carrier_frequency_hz),
        {"scenario.scenario",
         {[](SimulationConfig& c, const std::string& v) { c.scenario = parse_scenario(v); },
          [](const SimulationConfig& c) { return std::string(to_string(c.scenario)); }}},
        SCSIM_DOUBLE_KEY("scenario", "tr_separation_2d_m", tr_separation_2d_m),
        SCSIM_DOUBLE_KEY("scenario", "bs_height_m", bs_height_m),
        SCSIM_DOUBLE_KEY("scenario", "ut_height_m", ut_height_m),

        SCSIM_DOUBLE_KEY("track", "ut_speed_mps", ut_speed_mps),
        {"track.shape",
         {[](SimulationConfig& c, const std::string& v) { c.track = parse_track(v); },
          [](const SimulationConfig& c) { return std::string(to_string(c.track)); }}},
        SCSIM_DOUBLE_KEY("track", "heading_rad", track_heading_rad),
        {"track.hexagon_turn",
         {[](SimulationConfig& c, const std::string& v) { c.hexagon_turn = parse_turn(v); },
          [](const SimulationConfig& c) { return std::string(to_string(c.hexagon_turn)); }}},
        SCSIM_DOUBLE_KEY("track", "track_length_m", track_length_m),
        SCSIM_DOUBLE_KEY("track", "update_distance_m", update_distance_m),

        SCSIM_DOUBLE_KEY("field", "correlation_distance_los_m", correlation_distance_los_m),
        SCSIM_DOUBLE_KEY("field", "correlation_distance_sf_m", correlation_distance_sf_m),
        SCSIM_DOUBLE_KEY("field", "map_extent_x_m", map_extent_x_m),
        SCSIM_DOUBLE_KEY("field", "map_extent_y_m", map_extent_y_m),
        SCSIM_DOUBLE_KEY("field", "map_resolution_m", map_resolution_m),
        SCSIM_DOUBLE_KEY("field", "sf_map_extent_m", sf_map_extent_m),
        {"field.los_mode",
         {[](SimulationConfig& c, const std::string& v) { c.los_mode = parse_los_mode(v); },
          [](const SimulationConfig& c) { return std::string(to_string(c.los_mode)); }}},

        SCSIM_DOUBLE_KEY("pathloss", "exponent_los", exponent_los),
        SCSIM_DOUBLE_KEY("pathloss", "exponent_nlos", exponent_nlos),
        SCSIM_DOUBLE_KEY("pathloss", "sf_sigma_los_db", sf_sigma_los_db),
        SCSIM_DOUBLE_KEY("pathloss", "sf_sigma_nlos_db", sf_sigma_nlos_db),
        SCSIM_DOUBLE_KEY("pathloss", "tx_power_dbm", tx_power_dbm),

        SCSIM_INT_KEY("drop", "min_clusters", min_clusters),
        SCSIM_INT_KEY("drop", "max_clusters", max_clusters),
        SCSIM_INT_KEY("drop", "min_subpaths", min_subpaths),
        SCSIM_INT_KEY("drop", "max_subpaths", max_subpaths),
        SCSIM_DOUBLE_KEY("drop", "mu_tau_los_ns", mu_tau_los_ns),
        SCSIM_DOUBLE_KEY("drop", "mu_tau_nlos_ns", mu_tau_nlos_ns),
        SCSIM_DOUBLE_KEY("drop", "subpath_delay_spacing_ns", subpath_delay_spacing_ns),
        SCSIM_DOUBLE_KEY("drop", "cluster_decay_ns", cluster_decay_ns),
        SCSIM_DOUBLE_KEY("drop", "subpath_decay_ns", subpath_decay_ns),
        SCSIM_DOUBLE_KEY("drop", "sigma_z_db", sigma_z_db),
        SCSIM_DOUBLE_KEY("drop", "sigma_u_db", sigma_u_db),
        SCSIM_DOUBLE_KEY("drop", "zenith_spread_rad", zenith_spread_rad),

        {"run.rng_seed",
         {[](SimulationConfig& c, const std::string& v)
          {
              c.rng_seed = parse_u64("run.rng_seed", v);
              c.rng_seed_set = true;
          },
          [](const SimulationConfig& c) { return std::to_string(c.rng_seed); }}},
        {"run.write_maps",
         {[](SimulationConfig& c, const std::string& v)
          { c.write_maps = parse_bool("run.write_maps", v); },
          [](const SimulationConfig& c) { return std::string(c.write_maps ? "true" : "false"); }}},
    };
    return table;
}

#undef SCSIM_DOUBLE_KEY
#undef SCSIM_INT_KEY

} // namespace

const char* to_string(Scenario s)
{
    switch (s)
    {
    case Scenario::UMi:
        return "umi";
    case Scenario::UMa:
        return "uma";
    case Scenario::RMa:
        return "rma";
    }
    return "umi";
}

const char* to_string(TrackShape t)
{
    return t == TrackShape::Linear ? "linear" : "half_hexagon";
}

const char* to_string(TurnDirection t)
{
    return t == TurnDirection::Left ? "left" : "right";
}

const char* to_string(LosMode m)
{
    switch (m)
    {
    case LosMode::Auto:
        return "auto";
    case LosMode::ForceLos:
        return "force_los";
    case LosMode::ForceNlos:
        return "force_nlos";
    }
    return "auto";
}

std::vector<ConfigViolation> validate_config(const SimulationConfig& c)
{
    std::vector<ConfigViolation> v;
    auto fail = [&v](const char* field, const std::string& reason)
    { v.push_back({field, reason}); };

    if (!(c.carrier_frequency_hz >= 0.8e9 && c.carrier_frequency_hz <= 100e9))
        fail("scenario.carrier_frequency_hz", "must be in [0.8, 100] GHz");
    if (!(c.tr_separation_2d_m > 0.0))
        fail("scenario.tr_separation_2d_m", "must be positive");
    if (!(c.bs_height_m > 0.0))
        fail("scenario.bs_height_m", "must be positive");
    if (!(c.ut_height_m > 0.0))
        fail("scenario.ut_height_m", "must be positive");

    if (!(c.ut_speed_mps > 0.0))
        fail("track.ut_speed_mps", "must be positive");
    if (!(c.track_length_m > 0.0))
        fail("track.track_length_m", "must be positive");
    if (!(c.update_distance_m > 0.0))
        fail("track.update_distance_m", "must be positive");
    else if (c.update_distance_m > 1.0)
        fail("track.update_distance_m", "exceeds 1 m");
    if (c.track == TrackShape::HalfHexagon && c.track_length_m > 0.0 &&
        c.tr_separation_2d_m <= c.track_length_m / 3.0)
        fail("scenario.tr_separation_2d_m",
             "must exceed track_length / 3 for the half-hexagon track");

    if (!(c.correlation_distance_los_m > 0.0))
        fail("field.correlation_distance_los_m", "must be positive");
    if (!(c.correlation_distance_sf_m > 0.0))
        fail("field.correlation_distance_sf_m", "must be positive");
    if (!(c.map_resolution_m > 0.0))
        fail("field.map_resolution_m", "must be positive");
    if (c.map_extent_x_m < 0.0 || c.map_extent_y_m < 0.0)
        fail("field.map_extent", "must be non-negative (0 = auto)");
    if (!(c.sf_map_extent_m > 0.0))
        fail("field.sf_map_extent_m", "must be positive");

    if (!(c.exponent_los > 0.0))
        fail("pathloss.exponent_los", "must be positive");
    if (!(c.exponent_nlos > 0.0))
        fail("pathloss.exponent_nlos", "must be positive");
    if (c.sf_sigma_los_db < 0.0)
        fail("pathloss.sf_sigma_los_db", "must be non-negative");
    if (c.sf_sigma_nlos_db < 0.0)
        fail("pathloss.sf_sigma_nlos_db", "must be non-negative");

    if (c.min_clusters < 1)
        fail("drop.min_clusters", "must be at least 1");
    if (c.max_clusters < c.min_clusters)
        fail("drop.max_clusters", "must be >= min_clusters");
    if (c.min_subpaths < 1)
        fail("drop.min_subpaths", "must be at least 1");
    if (c.max_subpaths < c.min_subpaths)
        fail("drop.max_subpaths", "must be >= min_subpaths");
    if (!(c.mu_tau_los_ns > 0.0))
        fail("drop.mu_tau_los_ns", "must be positive");
    if (!(c.mu_tau_nlos_ns > 0.0))
        fail("drop.mu_tau_nlos_ns", "must be positive");
    if (!(c.subpath_delay_spacing_ns > 0.0))
        fail("drop.subpath_delay_spacing_ns", "must be positive");
    if (!(c.cluster_decay_ns > 0.0))
        fail("drop.cluster_decay_ns", "must be positive");
    if (!(c.subpath_decay_ns > 0.0))
        fail("drop.subpath_decay_ns", "must be positive");
    if (c.sigma_z_db < 0.0)
        fail("drop.sigma_z_db", "must be non-negative");
    if (c.sigma_u_db < 0.0)
        fail("drop.sigma_u_db", "must be non-negative");
    if (!(c.zenith_spread_rad > 0.0))
        fail("drop.zenith_spread_rad", "must be positive");

    if (!c.rng_seed_set)
        fail("run.rng_seed", "required (config file key or --seed)");

    // Geometry checks need a well-formed track.
    const bool track_ok = c.track_length_m > 0.0 && c.update_distance_m > 0.0 &&
                          c.ut_speed_mps > 0.0 && c.tr_separation_2d_m > 0.0 &&
                          (c.track != TrackShape::HalfHexagon ||
                           c.tr_separation_2d_m > c.track_length_m / 3.0);
    if (track_ok)
    {
        const Trajectory traj = generate_trajectory(c);
        double min_d2d = c.tr_separation_2d_m;
        Vec2 lo = c.bs_position(), hi = c.bs_position();
        for (const auto& p : traj.points)
        {
            min_d2d = std::min(min_d2d, norm(p.position - c.bs_position()));
            lo.x = std::min(lo.x, p.position.x);
            lo.y = std::min(lo.y, p.position.y);
            hi.x = std::max(hi.x, p.position.x);
            hi.y = std::max(hi.y, p.position.y);
        }
        if (min_d2d < 1.0)
            fail("track", "trajectory passes within 1 m of the BS (close-in reference)");

        if (c.map_extent_x_m > 0.0 || c.map_extent_y_m > 0.0)
        {
            const double margin = std::max(c.correlation_distance_los_m, c.correlation_distance_sf_m);
            if (hi.x - lo.x + 2.0 * margin > c.map_extent_x_m ||
                hi.y - lo.y + 2.0 * margin > c.map_extent_y_m)
                fail("field.map_extent",
                     "must contain the BS and every trajectory point with one correlation-distance"
                     " margin");
        }
    }

    return v;
}

void require_valid(const SimulationConfig& config)
{
    auto violations = validate_config(config);
    if (violations.empty())
        return;
    std::string what = "invalid configuration:";
    for (const auto& vi : violations)
        what += "\n  " + vi.field + ": " + vi.reason;
    throw ConfigError(what, std::move(violations));
}

SimulationConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);

    SimulationConfig config;
    std::vector<ConfigViolation> problems;
    std::string line, section;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos)
            line = line.substr(0, comment);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
            {
                problems.push_back({path + ":" + std::to_string(line_no), "malformed section header"});
                continue;
            }
            section = lower(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
        {
            problems.push_back({path + ":" + std::to_string(line_no), "expected key = value"});
            continue;
        }
        const std::string key = section + "." + lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = key_table().find(key);
        if (it == key_table().end())
        {
            problems.push_back({key, "unknown configuration key"});
            continue;
        }
        try
        {
            it->second.set(config, value);
        }
        catch (const std::exception& e)
        {
            problems.push_back({key, e.what()});
        }
    }
    if (!problems.empty())
    {
        std::string what = "errors in config file " + path + ":";
        for (const auto& p : problems)
            what += "\n  " + p.field + ": " + p.reason;
        throw ConfigError(what, std::move(problems));
    }
    return config;
}

void apply_override(SimulationConfig& config, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("override must be section.key=value: '" + assignment + "'");
    const std::string key = lower(trim(assignment.substr(0, eq)));
    const std::string value = trim(assignment.substr(eq + 1));
    const auto it = key_table().find(key);
    if (it == key_table().end())
        throw std::invalid_argument("unknown configuration key: '" + key + "'");
    it->second.set(config, value);
}

std::string config_to_json(const SimulationConfig& config)
{
    nlohmann::ordered_json j;
    for (const auto& [key, accessor] : key_table())
    {
        const auto dot = key.find('.');
        j[key.substr(0, dot)][key.substr(dot + 1)] = accessor.get(config);
    }
    return j.dump(2);
}

SimulationConfig config_from_json(const std::string& json_text)
{
    const auto j = nlohmann::json::parse(json_text);
    SimulationConfig config;
    for (const auto& [section, keys] : j.items())
        for (const auto& [name, value] : keys.items())
        {
            const auto it = key_table().find(section + "." + name);
            if (it == key_table().end())
                throw std::invalid_argument("unknown configuration key: " + section + "." + name);
            it->second.set(config, value.get<std::string>());
        }
    return config;
}

} // namespace scsim
