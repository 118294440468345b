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

#include <array>
#include <cmath>

#include "scsim/drop.hpp"

using namespace scsim;

namespace
{

SimulationConfig base_config()
{
    SimulationConfig c;
    c.rng_seed = 1;
    c.rng_seed_set = true;
    return c;
}

TimeCluster cluster_at(double delay_ns, int n_subpaths)
{
    TimeCluster cluster;
    for (int m = 0; m < n_subpaths; ++m)
    {
        Subpath sp;
        sp.excess_delay_ns = delay_ns + 2.5 * m;
        cluster.subpaths.push_back(sp);
    }
    return cluster;
}

} // namespace

TEST_CASE("power allocation: a single subpath receives the whole budget")
{
    std::vector<TimeCluster> clusters = {cluster_at(0.0, 1)};
    const std::array<double, 1> z = {0.0};
    allocate_powers(clusters, 3.5, z, {{0.0}}, 49.4, 16.9);
    CHECK(clusters[0].subpaths[0].power_mw == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("power allocation: equal delays and shadowing split evenly")
{
    std::vector<TimeCluster> clusters = {cluster_at(10.0, 1), cluster_at(10.0, 1)};
    const std::array<double, 2> z = {4.0, 4.0};
    allocate_powers(clusters, 2.0, z, {{0.0}, {0.0}}, 49.4, 16.9);
    CHECK(clusters[0].subpaths[0].power_mw == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(clusters[1].subpaths[0].power_mw == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("power allocation: a 10 dB shadowing gap is a 10x power ratio")
{
    std::vector<TimeCluster> clusters = {cluster_at(25.0, 1), cluster_at(25.0, 1)};
    const std::array<double, 2> z = {10.0, 0.0};
    allocate_powers(clusters, 1.0, z, {{0.0}, {0.0}}, 49.4, 16.9);
    CHECK(clusters[0].power_mw() / clusters[1].power_mw() == doctest::Approx(10.0).epsilon(1e-9));
}

TEST_CASE("power allocation rejects a non-positive budget")
{
    std::vector<TimeCluster> clusters = {cluster_at(0.0, 2)};
    const std::array<double, 1> z = {0.0};
    CHECK_THROWS_AS(allocate_powers(clusters, 0.0, z, {{0.0, 0.0}}, 49.4, 16.9),
                    NonPositiveTotalPowerError);
    CHECK_THROWS_AS(allocate_powers(clusters, -1.0, z, {{0.0, 0.0}}, 49.4, 16.9),
                    NonPositiveTotalPowerError);
}

TEST_CASE("LOS drop: unique zero-delay LOS component with exact bearings")
{
    const SimulationConfig c = base_config();
    Pcg32 rng = make_stream(42, RngPurpose::Drop);
    const ChannelSnapshot snap = generate_initial_drop(c, LosState::Los, rng);

    const Subpath& first = snap.clusters.front().subpaths.front();
    CHECK(first.is_los_component);
    CHECK(first.excess_delay_ns == 0.0);
    // arrival azimuth points from the terminal back at the BS
    CHECK(first.aoa_az_rad ==
          doctest::Approx(bearing(c.ut_start(), c.bs_position())).epsilon(1e-12));
    CHECK(first.aod_az_rad ==
          doctest::Approx(bearing(c.bs_position(), c.ut_start())).epsilon(1e-12));
    // zeniths mirror each other through the horizon
    CHECK(first.zoa_rad + first.zod_rad == doctest::Approx(kPi).epsilon(1e-12));

    int los_count = 0;
    for (const auto& cluster : snap.clusters)
        for (const auto& sp : cluster.subpaths)
            los_count += sp.is_los_component ? 1 : 0;
    CHECK(los_count == 1);
}

TEST_CASE("NLOS drop carries no LOS component and starts at zero excess delay")
{
    Pcg32 rng = make_stream(42, RngPurpose::Drop);
    const ChannelSnapshot snap = generate_initial_drop(base_config(), LosState::Nlos, rng);
    for (const auto& cluster : snap.clusters)
        for (const auto& sp : cluster.subpaths)
            CHECK_FALSE(sp.is_los_component);
    CHECK(snap.clusters.front().subpaths.front().excess_delay_ns == 0.0);
}

TEST_CASE("drop power sums to the path-loss budget")
{
    const SimulationConfig c = base_config();
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
    {
        Pcg32 rng = make_stream(seed, RngPurpose::Drop);
        const LosState state = (seed % 2) ? LosState::Los : LosState::Nlos;
        const ChannelSnapshot snap = generate_initial_drop(c, state, rng);
        const double total = snap.sum_subpath_power_mw();
        CHECK(std::fabs(total - snap.total_received_power_mw) / snap.total_received_power_mw <
              1e-9);
        // rx dBm = tx dBm - PL dB
        CHECK(mw_to_dbm(snap.total_received_power_mw) ==
              doctest::Approx(c.tx_power_dbm - snap.path_loss_db).epsilon(1e-12));
    }
}

TEST_CASE("drop delays: clusters strictly increasing, subpaths strictly increasing")
{
    const SimulationConfig c = base_config();
    for (std::uint64_t seed = 1; seed <= 50; ++seed)
    {
        Pcg32 rng = make_stream(seed, RngPurpose::Drop);
        const LosState state = (seed % 2) ? LosState::Los : LosState::Nlos;
        const ChannelSnapshot snap = generate_initial_drop(c, state, rng);
        for (std::size_t n = 0; n < snap.clusters.size(); ++n)
        {
            if (n > 0)
                CHECK(snap.clusters[n].cluster_excess_delay_ns() >
                      snap.clusters[n - 1].cluster_excess_delay_ns());
            const auto& sub = snap.clusters[n].subpaths;
            for (std::size_t m = 1; m < sub.size(); ++m)
                CHECK(sub[m].excess_delay_ns > sub[m - 1].excess_delay_ns);
        }
    }
}

TEST_CASE("drop respects the configured cluster and subpath count ranges")
{
    SimulationConfig c = base_config();
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
    {
        Pcg32 rng = make_stream(seed, RngPurpose::Drop);
        const ChannelSnapshot snap = generate_initial_drop(c, LosState::Los, rng);
        CHECK(snap.clusters.size() >= 1);
        CHECK(snap.clusters.size() <= 6);
        for (std::size_t n = 0; n < snap.clusters.size(); ++n)
        {
            const std::size_t extra = (n == 0) ? 1 : 0; // LOS component rides on cluster 0
            CHECK(snap.clusters[n].subpaths.size() >= 1 + extra);
            CHECK(snap.clusters[n].subpaths.size() <= 30 + extra);
        }
    }
}

TEST_CASE("drop angles and phases stay in their ranges")
{
    const SimulationConfig c = base_config();
    for (std::uint64_t seed = 1; seed <= 20; ++seed)
    {
        Pcg32 rng = make_stream(seed, RngPurpose::Drop);
        const ChannelSnapshot snap = generate_initial_drop(c, LosState::Los, rng);
        for (const auto& cluster : snap.clusters)
            for (const auto& sp : cluster.subpaths)
            {
                CHECK(sp.aod_az_rad > -kPi);
                CHECK(sp.aod_az_rad <= kPi);
                CHECK(sp.aoa_az_rad > -kPi);
                CHECK(sp.aoa_az_rad <= kPi);
                CHECK(sp.zod_rad > 0.0);
                CHECK(sp.zod_rad < kPi);
                CHECK(sp.zoa_rad > 0.0);
                CHECK(sp.zoa_rad < kPi);
                CHECK(sp.phase_rad >= 0.0);
                CHECK(sp.phase_rad < kTwoPi);
                CHECK(sp.power_mw > 0.0);
                CHECK(sp.excess_delay_ns >= 0.0);
            }
    }
}

TEST_CASE("cluster count is uniform over {1..6} (chi-squared at 99%)")
{
    const SimulationConfig c = base_config();
    std::array<int, 6> hits{};
    const int n = 10000;
    for (int i = 0; i < n; ++i)
    {
        Pcg32 rng = make_stream(static_cast<std::uint64_t>(i + 1), RngPurpose::Drop);
        const ChannelSnapshot snap = generate_initial_drop(c, LosState::Nlos, rng);
        ++hits[snap.clusters.size() - 1];
    }
    const double expected = n / 6.0;
    double chi2 = 0.0;
    for (int h : hits)
        chi2 += (h - expected) * (h - expected) / expected;
    CHECK(chi2 < 15.086); // chi-squared, 5 dof, 99th percentile
}

TEST_CASE("the same seed reproduces the drop exactly")
{
    const SimulationConfig c = base_config();
    Pcg32 rng_a = make_stream(31, RngPurpose::Drop);
    Pcg32 rng_b = make_stream(31, RngPurpose::Drop);
    const ChannelSnapshot a = generate_initial_drop(c, LosState::Los, rng_a);
    const ChannelSnapshot b = generate_initial_drop(c, LosState::Los, rng_b);
    REQUIRE(a.clusters.size() == b.clusters.size());
    for (std::size_t n = 0; n < a.clusters.size(); ++n)
    {
        REQUIRE(a.clusters[n].subpaths.size() == b.clusters[n].subpaths.size());
        for (std::size_t m = 0; m < a.clusters[n].subpaths.size(); ++m)
        {
            const Subpath& x = a.clusters[n].subpaths[m];
            const Subpath& y = b.clusters[n].subpaths[m];
            CHECK(x.excess_delay_ns == y.excess_delay_ns);
            CHECK(x.power_mw == y.power_mw);
            CHECK(x.phase_rad == y.phase_rad);
            CHECK(x.aod_az_rad == y.aod_az_rad);
            CHECK(x.aoa_az_rad == y.aoa_az_rad);
            CHECK(x.zod_rad == y.zod_rad);
            CHECK(x.zoa_rad == y.zoa_rad);
        }
    }
}
