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

#include "scsim/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "scsim/csv.hpp"
#include "scsim/version.hpp"

namespace scsim
{

namespace
{

std::string utc_now()
{
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

std::string degrees(double rad) { return format_g9(rad * 180.0 / kPi); }

void write_file(const std::string& path, const std::string& bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace

std::string RunManifest::to_json() const
{
    nlohmann::ordered_json j;
    j["version"] = version;
    j["seed"] = seed;
    j["started_utc"] = started_utc;
    j["finished_utc"] = finished_utc;
    j["config"] = nlohmann::ordered_json::parse(config_to_json(config));
    j["warnings"] = {
        {"delay_clamps", counters.delay_clamps},
        {"azimuth_wraps", counters.azimuth_wraps},
        {"zenith_reflections", counters.zenith_reflections},
        {"los_transitions", counters.los_transitions},
    };
    j["max_delay_step_ns"] = counters.max_delay_step_ns;
    auto files = nlohmann::ordered_json::array();
    for (const auto& rec : outputs)
        files.push_back({{"file", rec.file}, {"digest", rec.digest}, {"rows", rec.rows}});
    j["outputs"] = files;
    return j.dump(2) + "\n";
}

RunResult run_simulation(const SimulationConfig& config)
{
    require_valid(config);
    const std::uint64_t seed = config.rng_seed;

    RunResult result;
    result.manifest.config = config;
    result.manifest.seed = seed;
    result.manifest.version = kVersion;
    result.manifest.started_utc = utc_now();

    const Trajectory trajectory = generate_trajectory(config);
    const TrajectoryPoint& start = trajectory.points.front();

    Pcg32 rng_los = make_stream(seed, RngPurpose::LosMap);
    const GridSpec los_spec = los_grid_spec(config, trajectory);
    result.maps.los_field =
        build_correlated_map(los_spec, config.correlation_distance_los_m, rng_los);

    LosState state0 = LosState::Nlos;
    switch (config.los_mode)
    {
    case LosMode::Auto:
        state0 = assign_los_state(result.maps.los_field, config.bs_position(), start.position,
                                  config.scenario);
        break;
    case LosMode::ForceLos:
        state0 = LosState::Los;
        break;
    case LosMode::ForceNlos:
        state0 = LosState::Nlos;
        break;
    }

    Pcg32 rng_shadow = make_stream(seed, RngPurpose::PathShadow);
    const double path_shadow_z = rng_shadow.normal();
    const double sigma0 =
        (state0 == LosState::Los) ? config.sf_sigma_los_db : config.sf_sigma_nlos_db;

    Pcg32 rng_drop = make_stream(seed, RngPurpose::Drop);
    ChannelSnapshot snapshot =
        generate_initial_drop(config, state0, rng_drop, path_shadow_z * sigma0);

    result.maps.sf = build_sf_maps(config, trajectory, snapshot.clusters.size(), seed);

    EvolutionState evo_state =
        make_evolution_state(snapshot, config, start, seed, path_shadow_z);

    // Source the anchor allocation from the shadowing fields too, so the
    // first trajectory update continues the same correlated realization
    // instead of jumping off independent draws.
    update_powers(snapshot, evo_state, result.maps.sf, start.position,
                  snapshot.total_received_power_mw, config);

    result.snapshots.reserve(trajectory.points.size());
    result.snapshots.push_back(snapshot);

    for (std::size_t k = 1; k < trajectory.points.size(); ++k)
    {
        try
        {
            step(snapshot, evo_state, trajectory.points[k], result.maps, config);
        }
        catch (const std::exception& e)
        {
            std::ostringstream os;
            os << "step " << k << " at position (" << trajectory.points[k].position.x << ", "
               << trajectory.points[k].position.y << "): " << e.what();
            throw std::runtime_error(os.str());
        }
        result.snapshots.push_back(snapshot);
    }

    result.manifest.counters = evo_state.counters;
    result.manifest.finished_utc = utc_now();
    return result;
}

std::vector<std::string> write_outputs(const std::vector<ChannelSnapshot>& snapshots,
                                       RunManifest& manifest, const std::string& out_dir,
                                       const SimMaps* maps)
{
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    const Vec2 bs = manifest.config.bs_position();
    const double dh = manifest.config.bs_height_m - manifest.config.ut_height_m;

    std::string cir = "time_s,step,cluster_id,subpath_id,excess_delay_ns,power_dbm,phase_rad,"
                      "aod_az_deg,zod_deg,aoa_az_deg,zoa_deg,is_los\n";
    std::string summary = "time_s,x_m,y_m,d_2d_m,d_3d_m,los_state,path_loss_db,rx_power_dbm,"
                          "num_clusters\n";
    std::string angles = "time_s,step,cluster_id,subpath_id,aod_az_deg,zod_deg,aoa_az_deg,"
                         "zoa_deg\n";
    std::string delays = "time_s,step,cluster_id,excess_delay_ns\n";
    std::uint64_t cir_rows = 0, summary_rows = 0, angle_rows = 0, delay_rows = 0;

    for (std::size_t k = 0; k < snapshots.size(); ++k)
    {
        const ChannelSnapshot& snap = snapshots[k];
        const std::string t = format_g9(snap.time_s);
        const std::string ks = std::to_string(k);

        const double d_2d = norm(snap.ut_position - bs);
        const double d_3d = std::sqrt(d_2d * d_2d + dh * dh);
        summary += t + "," + format_g9(snap.ut_position.x) + "," + format_g9(snap.ut_position.y) +
                   "," + format_g9(d_2d) + "," + format_g9(d_3d) + "," +
                   to_string(snap.los_state) + "," + format_g9(snap.path_loss_db) + "," +
                   format_g9(mw_to_dbm(snap.total_received_power_mw)) + "," +
                   std::to_string(snap.clusters.size()) + "\n";
        ++summary_rows;

        for (std::size_t n = 0; n < snap.clusters.size(); ++n)
        {
            const TimeCluster& cluster = snap.clusters[n];
            delays += t + "," + ks + "," + std::to_string(n) + "," +
                      format_g9(cluster.cluster_excess_delay_ns()) + "\n";
            ++delay_rows;
            for (std::size_t m = 0; m < cluster.subpaths.size(); ++m)
            {
                const Subpath& sp = cluster.subpaths[m];
                const std::string row_id = t + "," + ks + "," + std::to_string(n) + "," +
                                           std::to_string(m) + ",";
                cir += row_id + format_g9(sp.excess_delay_ns) + "," +
                       format_g9(mw_to_dbm(sp.power_mw)) + "," + format_g9(sp.phase_rad) + "," +
                       degrees(sp.aod_az_rad) + "," + degrees(sp.zod_rad) + "," +
                       degrees(sp.aoa_az_rad) + "," + degrees(sp.zoa_rad) + "," +
                       (sp.is_los_component ? "1" : "0") + "\n";
                ++cir_rows;
                angles += row_id + degrees(sp.aod_az_rad) + "," + degrees(sp.zod_rad) + "," +
                          degrees(sp.aoa_az_rad) + "," + degrees(sp.zoa_rad) + "\n";
                ++angle_rows;
            }
        }
    }

    manifest.outputs.clear();
    std::vector<std::string> written;
    auto emit = [&](const std::string& name, const std::string& bytes, std::uint64_t rows)
    {
        const std::string path = (fs::path(out_dir) / name).string();
        write_file(path, bytes);
        manifest.outputs.push_back({name, fnv1a64_hex(bytes), rows});
        written.push_back(path);
    };

    emit("cir.csv", cir, cir_rows);
    emit("summary.csv", summary, summary_rows);
    emit("angles.csv", angles, angle_rows);
    emit("delays.csv", delays, delay_rows);

    if (maps != nullptr && manifest.config.write_maps)
    {
        emit("los_field.csv", map_to_csv(maps->los_field),
             static_cast<std::uint64_t>(maps->los_field.height));
        const LosStateMap state_map =
            make_los_state_map(maps->los_field, bs, manifest.config.scenario);
        emit("los_state.csv", map_to_csv(state_map.underlying),
             static_cast<std::uint64_t>(state_map.underlying.height));
        for (std::size_t n = 0; n < maps->sf.cluster_shadow.size(); ++n)
        {
            emit("sf_z_cluster" + std::to_string(n) + ".csv",
                 map_to_csv(maps->sf.cluster_shadow[n]),
                 static_cast<std::uint64_t>(maps->sf.cluster_shadow[n].height));
            emit("sf_u_cluster" + std::to_string(n) + ".csv",
                 map_to_csv(maps->sf.subpath_shadow[n]),
                 static_cast<std::uint64_t>(maps->sf.subpath_shadow[n].height));
        }
    }

    const std::string manifest_path = (fs::path(out_dir) / "manifest.json").string();
    write_file(manifest_path, manifest.to_json());
    written.push_back(manifest_path);
    return written;
}

} // namespace scsim
