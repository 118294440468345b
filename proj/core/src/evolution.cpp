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

#include "scsim/evolution.hpp"

#include <algorithm>
#include <cmath>

#include "scsim/path_loss.hpp"

namespace scsim
{

namespace
{

double d3d_from(const SimulationConfig& config, Vec2 position)
{
    const double d_2d = norm(position - config.bs_position());
    const double dh = config.bs_height_m - config.ut_height_m;
    return std::sqrt(d_2d * d_2d + dh * dh);
}

// Reflect a zenith angle at the poles into (0, pi); each reflection flips the
// associated azimuth by pi.
void reflect_zenith(double& zenith, double& azimuth, StepCounters& counters)
{
    while (zenith < 0.0 || zenith > kPi)
    {
        if (zenith < 0.0)
            zenith = -zenith;
        else
            zenith = kTwoPi - zenith;
        azimuth += kPi;
        ++counters.zenith_reflections;
    }
}

double wrap_azimuth_counted(double a, StepCounters& counters)
{
    if (a > kPi || a <= -kPi)
        ++counters.azimuth_wraps;
    return wrap_azimuth(a);
}

} // namespace

AngleRates compute_slopes(const Subpath& subpath, const ReflectionAngles& psi, double speed_mps,
                          double heading_rad, double d_2d_m, double d_3d_m)
{
    if (!(d_2d_m > 0.0))
        throw DegenerateGeometryError("drift rates undefined at zero horizontal distance");
    AngleRates rates;
    rates.aod_az = speed_mps * std::sin(heading_rad - subpath.aod_az_rad + psi.aod_az) / d_2d_m;
    rates.zod = -speed_mps * std::cos(heading_rad - subpath.aod_az_rad + psi.zod) / d_3d_m;
    rates.aoa_az = -speed_mps * std::sin(heading_rad - subpath.aoa_az_rad + psi.aoa_az) / d_2d_m;
    rates.zoa = -speed_mps * std::cos(heading_rad - subpath.aoa_az_rad + psi.zoa) / d_3d_m;
    return rates;
}

void advance_angles(Subpath& subpath, const AngleRates& rates, double dt_s, StepCounters& counters)
{
    double aod = subpath.aod_az_rad + rates.aod_az * dt_s;
    double aoa = subpath.aoa_az_rad + rates.aoa_az * dt_s;
    double zod = subpath.zod_rad + rates.zod * dt_s;
    double zoa = subpath.zoa_rad + rates.zoa * dt_s;
    reflect_zenith(zod, aod, counters);
    reflect_zenith(zoa, aoa, counters);
    subpath.aod_az_rad = wrap_azimuth_counted(aod, counters);
    subpath.aoa_az_rad = wrap_azimuth_counted(aoa, counters);
    subpath.zod_rad = zod;
    subpath.zoa_rad = zoa;
}

void update_delays(ChannelSnapshot& snapshot, Vec3 velocity_mps, double dt_s,
                   StepCounters& counters)
{
    const Subpath* los = nullptr;
    for (auto& cluster : snapshot.clusters)
        for (auto& sp : cluster.subpaths)
        {
            const Vec3 r_hat = spherical_unit(sp.aoa_az_rad, sp.zoa_rad);
            const double dtau_ns = -dot(r_hat, velocity_mps) * dt_s / kSpeedOfLight * 1e9;
            sp.excess_delay_ns += dtau_ns;
            counters.max_delay_step_ns = std::max(counters.max_delay_step_ns, std::fabs(dtau_ns));
            if (sp.is_los_component)
                los = &sp;
        }

    // Re-reference so the earliest arrival sits at zero excess delay; in LOS
    // state the reference is the LOS component itself.
    double ref = 0.0;
    if (los != nullptr)
    {
        ref = los->excess_delay_ns;
    }
    else
    {
        ref = snapshot.clusters.front().subpaths.front().excess_delay_ns;
        for (const auto& cluster : snapshot.clusters)
            for (const auto& sp : cluster.subpaths)
                ref = std::min(ref, sp.excess_delay_ns);
    }
    for (auto& cluster : snapshot.clusters)
        for (auto& sp : cluster.subpaths)
        {
            sp.excess_delay_ns -= ref;
            if (sp.excess_delay_ns < 0.0)
            {
                sp.excess_delay_ns = 0.0;
                ++counters.delay_clamps;
            }
        }
}

void update_phases(ChannelSnapshot& snapshot, Vec3 velocity_mps,
                   const std::vector<std::vector<Vec3>>& arrival_dirs, double dt_s,
                   double frequency_hz)
{
    for (std::size_t n = 0; n < snapshot.clusters.size(); ++n)
        for (std::size_t m = 0; m < snapshot.clusters[n].subpaths.size(); ++m)
        {
            Subpath& sp = snapshot.clusters[n].subpaths[m];
            const double advance =
                -kTwoPi * frequency_hz / kSpeedOfLight * dot(arrival_dirs[n][m], velocity_mps) * dt_s;
            sp.phase_rad = wrap_phase(sp.phase_rad + advance);
        }
}

void update_powers(ChannelSnapshot& snapshot, const EvolutionState& state, const SfMaps& maps,
                   Vec2 position, double total_power_mw, const SimulationConfig& config)
{
    std::vector<double> cluster_shadow(snapshot.clusters.size());
    std::vector<std::vector<double>> subpath_shadow(snapshot.clusters.size());
    for (std::size_t n = 0; n < snapshot.clusters.size(); ++n)
    {
        cluster_shadow[n] = config.sigma_z_db * sample_map(maps.cluster_shadow[n], position);
        subpath_shadow[n].resize(snapshot.clusters[n].subpaths.size());
        for (std::size_t m = 0; m < snapshot.clusters[n].subpaths.size(); ++m)
        {
            const Vec2 offset = state.subpaths[n][m].shadow_offset;
            subpath_shadow[n][m] =
                config.sigma_u_db * sample_map(maps.subpath_shadow[n], position + offset);
        }
    }
    allocate_powers(snapshot.clusters, total_power_mw, cluster_shadow, subpath_shadow,
                    config.cluster_decay_ns, config.subpath_decay_ns);
    snapshot.total_received_power_mw = total_power_mw;
}

EvolutionState make_evolution_state(const ChannelSnapshot& snapshot,
                                    const SimulationConfig& config, const TrajectoryPoint& start,
                                    std::uint64_t seed, double path_shadow_z)
{
    EvolutionState state;
    state.last_state = snapshot.los_state;
    state.path_shadow_z = path_shadow_z;

    Pcg32 rng_psi = make_stream(seed, RngPurpose::ReflectionAngles);
    Pcg32 rng_off = make_stream(seed, RngPurpose::SampleOffsets);

    auto draw_offset = [&rng_off, &config]() -> Vec2
    {
        const double radius = config.correlation_distance_sf_m * std::sqrt(rng_off.uniform01());
        const double angle = rng_off.uniform_phase();
        return {radius * std::cos(angle), radius * std::sin(angle)};
    };

    // Reserved offset for the LOS component, drawn first so it exists whether
    // or not the run starts (or ever ends up) in LOS state.
    state.los_shadow_offset = draw_offset();

    const double d_2d = norm(start.position - config.bs_position());
    const double d_3d = d3d_from(config, start.position);

    state.subpaths.resize(snapshot.clusters.size());
    for (std::size_t n = 0; n < snapshot.clusters.size(); ++n)
        for (const Subpath& sp : snapshot.clusters[n].subpaths)
        {
            SubpathEvolution evo;
            if (sp.is_los_component)
            {
                evo.psi = {};
                evo.shadow_offset = state.los_shadow_offset;
            }
            else
            {
                evo.psi.aod_az = rng_psi.uniform_azimuth();
                evo.psi.zod = rng_psi.uniform_half_angle();
                evo.psi.aoa_az = rng_psi.uniform_azimuth();
                evo.psi.zoa = rng_psi.uniform_half_angle();
                evo.shadow_offset = draw_offset();
            }
            evo.rates = compute_slopes(sp, evo.psi, config.ut_speed_mps, start.heading_rad, d_2d,
                                       d_3d);
            state.subpaths[n].push_back(evo);
        }
    return state;
}

void step(ChannelSnapshot& snapshot, EvolutionState& state, const TrajectoryPoint& point,
          const SimMaps& maps, const SimulationConfig& config)
{
    const double dt = point.time_s - snapshot.time_s;
    const Vec2 move = point.position - snapshot.ut_position;
    const Vec3 velocity = {move.x / dt, move.y / dt, 0.0};

    // (a) propagation condition at the new position
    LosState new_state = snapshot.los_state;
    switch (config.los_mode)
    {
    case LosMode::Auto:
        new_state = assign_los_state(maps.los_field, config.bs_position(), point.position,
                                     config.scenario);
        break;
    case LosMode::ForceLos:
        new_state = LosState::Los;
        break;
    case LosMode::ForceNlos:
        new_state = LosState::Nlos;
        break;
    }

    // (b) time-variant path loss; the shadow draw is fixed, its sigma follows
    // the propagation condition
    const double d_2d = norm(point.position - config.bs_position());
    const double d_3d = d3d_from(config, point.position);
    const double sigma =
        (new_state == LosState::Los) ? config.sf_sigma_los_db : config.sf_sigma_nlos_db;
    const double pl = path_loss_db(config.carrier_frequency_hz, d_3d, new_state,
                                   state.path_shadow_z * sigma, config.exponent_los,
                                   config.exponent_nlos);
    const double total_mw = dbm_to_mw(config.tx_power_dbm - pl);

    // Arrival directions at the previous update, used by both the delay and
    // the phase updates.
    std::vector<std::vector<Vec3>> arrival_dirs(snapshot.clusters.size());
    for (std::size_t n = 0; n < snapshot.clusters.size(); ++n)
        for (const Subpath& sp : snapshot.clusters[n].subpaths)
            arrival_dirs[n].push_back(spherical_unit(sp.aoa_az_rad, sp.zoa_rad));

    // (c) delay update with the previous angles
    update_delays(snapshot, velocity, dt, state.counters);

    // Condition flip: clusters persist, only the LOS component comes or goes.
    const LosState old_state = snapshot.los_state;
    if (new_state != old_state)
    {
        ++state.counters.los_transitions;
        if (new_state == LosState::Los)
        {
            // The direct path arrives one delay bin ahead of everything else.
            for (auto& cluster : snapshot.clusters)
                for (auto& sp : cluster.subpaths)
                    sp.excess_delay_ns += config.subpath_delay_spacing_ns;
            Subpath los;
            los.is_los_component = true;
            los.excess_delay_ns = 0.0;
            los.aoa_az_rad = bearing(point.position, config.bs_position());
            los.aod_az_rad = bearing(config.bs_position(), point.position);
            const double dh = config.bs_height_m - config.ut_height_m;
            los.zoa_rad = std::acos(dh / d_3d);
            los.zod_rad = std::acos(-dh / d_3d);
            los.phase_rad =
                wrap_phase(-kTwoPi * config.carrier_frequency_hz * d_3d / kSpeedOfLight);
            snapshot.clusters[0].subpaths.insert(snapshot.clusters[0].subpaths.begin(), los);

            SubpathEvolution evo; // zero rates until re-anchoring below
            evo.shadow_offset = state.los_shadow_offset;
            state.subpaths[0].insert(state.subpaths[0].begin(), evo);
            arrival_dirs[0].insert(arrival_dirs[0].begin(), Vec3{});
        }
        else
        {
            for (std::size_t n = 0; n < snapshot.clusters.size(); ++n)
                for (std::size_t m = 0; m < snapshot.clusters[n].subpaths.size();)
                {
                    if (snapshot.clusters[n].subpaths[m].is_los_component)
                    {
                        snapshot.clusters[n].subpaths.erase(snapshot.clusters[n].subpaths.begin() + m);
                        state.subpaths[n].erase(state.subpaths[n].begin() + m);
                        arrival_dirs[n].erase(arrival_dirs[n].begin() + m);
                    }
                    else
                        ++m;
                }
            double ref = snapshot.clusters.front().subpaths.front().excess_delay_ns;
            for (const auto& cluster : snapshot.clusters)
                for (const auto& sp : cluster.subpaths)
                    ref = std::min(ref, sp.excess_delay_ns);
            for (auto& cluster : snapshot.clusters)
                for (auto& sp : cluster.subpaths)
                    sp.excess_delay_ns -= ref;
        }
    }

    snapshot.time_s = point.time_s;
    snapshot.ut_position = point.position;
    snapshot.los_state = new_state;
    snapshot.path_loss_db = pl;
    state.last_state = new_state;

    // (d) correlated power reallocation against the new total
    update_powers(snapshot, state, maps, point.position, total_mw, config);

    // (e) linear angle drift, then re-anchor the rates at the new position
    for (std::size_t n = 0; n < snapshot.clusters.size(); ++n)
        for (std::size_t m = 0; m < snapshot.clusters[n].subpaths.size(); ++m)
        {
            Subpath& sp = snapshot.clusters[n].subpaths[m];
            SubpathEvolution& evo = state.subpaths[n][m];
            advance_angles(sp, evo.rates, dt, state.counters);
            evo.rates = compute_slopes(sp, evo.psi, config.ut_speed_mps, point.heading_rad, d_2d,
                                       d_3d);
        }

    // (f) Doppler phase advance over the move, with the pre-advance angles
    update_phases(snapshot, velocity, arrival_dirs, dt, config.carrier_frequency_hz);
}

} // namespace scsim
