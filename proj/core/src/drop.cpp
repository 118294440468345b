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

#include "scsim/drop.hpp"

#include <algorithm>
#include <cmath>

#include "scsim/path_loss.hpp"

namespace scsim
{

void allocate_powers(std::vector<TimeCluster>& clusters, double total_power_mw,
                     std::span<const double> cluster_shadow_db,
                     const std::vector<std::vector<double>>& subpath_shadow_db,
                     double cluster_decay_ns, double subpath_decay_ns)
{
    if (!(total_power_mw > 0.0))
        throw NonPositiveTotalPowerError("total received power must be positive");

    std::vector<double> weights(clusters.size());
    double weight_sum = 0.0;
    for (std::size_t n = 0; n < clusters.size(); ++n)
    {
        const double tau = clusters[n].cluster_excess_delay_ns();
        weights[n] = std::exp(-tau / cluster_decay_ns) *
                     std::pow(10.0, cluster_shadow_db[n] / 10.0);
        weight_sum += weights[n];
    }

    for (std::size_t n = 0; n < clusters.size(); ++n)
    {
        TimeCluster& cluster = clusters[n];
        cluster.cluster_shadow_db = cluster_shadow_db[n];
        const double cluster_power = total_power_mw * weights[n] / weight_sum;
        const double tau0 = cluster.cluster_excess_delay_ns();

        std::vector<double> sub_weights(cluster.subpaths.size());
        double sub_sum = 0.0;
        for (std::size_t m = 0; m < cluster.subpaths.size(); ++m)
        {
            const double offset = cluster.subpaths[m].excess_delay_ns - tau0;
            sub_weights[m] = std::exp(-offset / subpath_decay_ns) *
                             std::pow(10.0, subpath_shadow_db[n][m] / 10.0);
            sub_sum += sub_weights[m];
        }
        for (std::size_t m = 0; m < cluster.subpaths.size(); ++m)
            cluster.subpaths[m].power_mw = cluster_power * sub_weights[m] / sub_sum;
    }
}

ChannelSnapshot generate_initial_drop(const SimulationConfig& config, LosState los_state,
                                      Pcg32& rng, double sf_db)
{
    const Vec2 ut = config.ut_start();
    const Vec2 bs = config.bs_position();
    const double d_2d = norm(ut - bs);
    const double dh = config.bs_height_m - config.ut_height_m;
    const double d_3d = std::sqrt(d_2d * d_2d + dh * dh);

    ChannelSnapshot snap;
    snap.time_s = 0.0;
    snap.ut_position = ut;
    snap.los_state = los_state;
    snap.path_loss_db = path_loss_db(config.carrier_frequency_hz, d_3d, los_state, sf_db,
                                     config.exponent_los, config.exponent_nlos);
    snap.total_received_power_mw = dbm_to_mw(config.tx_power_dbm - snap.path_loss_db);

    // 1. cluster count
    const int n_clusters = rng.uniform_int(config.min_clusters, config.max_clusters);
    snap.clusters.resize(static_cast<std::size_t>(n_clusters));

    // 2. per-cluster subpath counts (the LOS component comes on top)
    std::vector<int> n_subpaths(snap.clusters.size());
    for (auto& n : n_subpaths)
        n = rng.uniform_int(config.min_subpaths, config.max_subpaths);

    // 3. cluster excess delays: first at 0, then exponential inter-arrivals
    const double mu_tau =
        (los_state == LosState::Los) ? config.mu_tau_los_ns : config.mu_tau_nlos_ns;
    std::vector<double> cluster_delay(snap.clusters.size(), 0.0);
    for (std::size_t n = 1; n < cluster_delay.size(); ++n)
        cluster_delay[n] = cluster_delay[n - 1] + rng.exponential(mu_tau);

    // 4. subpath delays within each cluster: strictly increasing gaps of
    // spacing * (1 + U[0,1)). In the LOS cluster the first gap separates the
    // zero-delay LOS component from the first scattered subpath.
    for (std::size_t n = 0; n < snap.clusters.size(); ++n)
    {
        TimeCluster& cluster = snap.clusters[n];
        const bool with_los = (los_state == LosState::Los) && n == 0;
        double offset = 0.0;
        for (int m = 0; m < n_subpaths[n]; ++m)
        {
            if (m > 0 || with_los)
                offset += config.subpath_delay_spacing_ns * (1.0 + rng.uniform01());
            Subpath sp;
            sp.excess_delay_ns = cluster_delay[n] + offset;
            cluster.subpaths.push_back(sp);
        }
    }

    // 5. angles: uniform azimuths, zeniths concentrated about the horizon
    for (auto& cluster : snap.clusters)
        for (auto& sp : cluster.subpaths)
        {
            sp.aod_az_rad = rng.uniform_azimuth();
            sp.aoa_az_rad = rng.uniform_azimuth();
            sp.zod_rad = std::clamp(0.5 * kPi + rng.laplace(config.zenith_spread_rad), 1e-6,
                                    kPi - 1e-6);
            sp.zoa_rad = std::clamp(0.5 * kPi + rng.laplace(config.zenith_spread_rad), 1e-6,
                                    kPi - 1e-6);
        }

    // 6. phases
    for (auto& cluster : snap.clusters)
        for (auto& sp : cluster.subpaths)
            sp.phase_rad = rng.uniform_phase();

    // 7. LOS component: zero excess delay, exact geometric bearings
    if (los_state == LosState::Los)
    {
        Subpath los;
        los.is_los_component = true;
        los.excess_delay_ns = 0.0;
        los.aoa_az_rad = bearing(ut, bs);
        los.aod_az_rad = bearing(bs, ut);
        los.zoa_rad = std::acos(dh / d_3d);
        los.zod_rad = std::acos(-dh / d_3d);
        los.phase_rad = rng.uniform_phase();
        snap.clusters[0].subpaths.insert(snap.clusters[0].subpaths.begin(), los);
    }

    // 8. shadowing draws and power allocation
    std::vector<double> cluster_shadow(snap.clusters.size());
    for (auto& z : cluster_shadow)
        z = config.sigma_z_db * rng.normal();
    std::vector<std::vector<double>> subpath_shadow(snap.clusters.size());
    for (std::size_t n = 0; n < snap.clusters.size(); ++n)
    {
        subpath_shadow[n].resize(snap.clusters[n].subpaths.size());
        for (auto& u : subpath_shadow[n])
            u = config.sigma_u_db * rng.normal();
    }
    allocate_powers(snap.clusters, snap.total_received_power_mw, cluster_shadow, subpath_shadow,
                    config.cluster_decay_ns, config.subpath_decay_ns);
    return snap;
}

} // namespace scsim
