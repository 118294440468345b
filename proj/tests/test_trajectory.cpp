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

#include <cmath>

#include "scsim/trajectory.hpp"

using namespace scsim;

namespace
{

SimulationConfig fig_route()
{
    SimulationConfig c;
    c.rng_seed = 1;
    c.rng_seed_set = true;
    c.tr_separation_2d_m = 50.0;
    c.track_length_m = 20.0;
    c.ut_speed_mps = 1.0;
    c.update_distance_m = 0.25;
    c.track = TrackShape::HalfHexagon;
    return c;
}

} // namespace

TEST_CASE("80 points over a 20 m track at 0.25 m updates, 20 s epoch")
{
    const Trajectory traj = generate_trajectory(fig_route());
    REQUIRE(traj.points.size() == 80);
    CHECK(traj.update_interval_s == doctest::Approx(0.25));
    CHECK(traj.points.front().time_s == 0.0);
    CHECK(traj.points.back().time_s == doctest::Approx(79 * 0.25));
    // first point at the start position, T-R separation from the BS
    CHECK(traj.points.front().position.x == doctest::Approx(50.0));
    CHECK(traj.points.front().position.y == doctest::Approx(0.0).scale(50.0).epsilon(1e-12));
}

TEST_CASE("track length equal to the update distance yields a single point")
{
    SimulationConfig c = fig_route();
    c.track = TrackShape::Linear;
    c.track_length_m = 0.25;
    const Trajectory traj = generate_trajectory(c);
    REQUIRE(traj.points.size() == 1);
    CHECK(traj.points[0].position.x == doctest::Approx(50.0));
    CHECK(traj.points[0].time_s == 0.0);
}

TEST_CASE("update interval times speed equals the update distance")
{
    SimulationConfig c = fig_route();
    c.ut_speed_mps = 1.6;
    const Trajectory traj = generate_trajectory(c);
    CHECK(traj.update_interval_s * c.ut_speed_mps == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("linear track: consecutive points exactly update_distance apart")
{
    SimulationConfig c = fig_route();
    c.track = TrackShape::Linear;
    c.track_heading_rad = 0.3;
    const Trajectory traj = generate_trajectory(c);
    double total = 0.0;
    for (std::size_t k = 1; k < traj.points.size(); ++k)
    {
        const double d = norm(traj.points[k].position - traj.points[k - 1].position);
        CHECK(d == doctest::Approx(0.25).epsilon(1e-9));
        total += d;
        CHECK(traj.points[k].heading_rad == doctest::Approx(0.3));
        CHECK(traj.points[k].time_s - traj.points[k - 1].time_s ==
              doctest::Approx(traj.update_interval_s).epsilon(1e-12));
    }
    // total polyline length = (count - 1) * update_distance
    CHECK(total == doctest::Approx(79 * 0.25).epsilon(1e-9));
}

TEST_CASE("half-hexagon polyline has three equal sides summing to the track length")
{
    const auto poly = build_track_polyline(fig_route());
    REQUIRE(poly.size() == 4);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
    {
        const double side = norm(poly[i + 1] - poly[i]);
        CHECK(side == doctest::Approx(20.0 / 3.0).epsilon(1e-12));
        total += side;
    }
    CHECK(std::fabs(total - 20.0) < 1e-9);
    // start vertex at the configured T-R separation
    CHECK(norm(poly[0]) == doctest::Approx(50.0).epsilon(1e-12));
}

TEST_CASE("half-hexagon heading breaks by exactly pi/3 at points 27 and 54")
{
    const Trajectory traj = generate_trajectory(fig_route());
    REQUIRE(traj.points.size() == 80);
    for (std::size_t k = 1; k < traj.points.size(); ++k)
    {
        const double dh = wrap_azimuth(traj.points[k].heading_rad - traj.points[k - 1].heading_rad);
        if (k == 27 || k == 54)
            CHECK(std::fabs(dh) == doctest::Approx(kPi / 3.0).epsilon(1e-12));
        else
            CHECK(dh == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("turn direction flips the route mirror image")
{
    SimulationConfig left = fig_route();
    SimulationConfig right = fig_route();
    right.hexagon_turn = TurnDirection::Right;
    const Trajectory tl = generate_trajectory(left);
    const Trajectory tr = generate_trajectory(right);
    const double dl = wrap_azimuth(tl.points[27].heading_rad - tl.points[26].heading_rad);
    const double dr = wrap_azimuth(tr.points[27].heading_rad - tr.points[26].heading_rad);
    CHECK(dl == doctest::Approx(kPi / 3.0).epsilon(1e-12));
    CHECK(dr == doctest::Approx(-kPi / 3.0).epsilon(1e-12));
}

TEST_CASE("half-hexagon BS distance profile is symmetric about the track midpoint")
{
    const SimulationConfig c = fig_route();
    const Trajectory traj = generate_trajectory(c);
    // sample k mirrors onto sample count-k (arc s and L-s)
    for (std::size_t k = 1; k < traj.points.size(); ++k)
    {
        const double d_a = norm(traj.points[k].position);
        const double d_b = norm(traj.points[traj.points.size() - k].position);
        CHECK(d_a == doctest::Approx(d_b).epsilon(1e-9));
    }
}

TEST_CASE("trajectory generation is deterministic and RNG-free")
{
    const Trajectory a = generate_trajectory(fig_route());
    const Trajectory b = generate_trajectory(fig_route());
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t k = 0; k < a.points.size(); ++k)
    {
        CHECK(a.points[k].position.x == b.points[k].position.x);
        CHECK(a.points[k].position.y == b.points[k].position.y);
        CHECK(a.points[k].heading_rad == b.points[k].heading_rad);
        CHECK(a.points[k].time_s == b.points[k].time_s);
    }
}
