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

#include "scsim/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace scsim
{

std::vector<Vec2> build_track_polyline(const SimulationConfig& config)
{
    const Vec2 start = config.ut_start();
    if (config.track == TrackShape::Linear)
    {
        const Vec2 end = start + config.track_length_m * heading_unit(config.track_heading_rad);
        return {start, end};
    }

    // Three consecutive edges of a regular hexagon. Hexagon side = circumradius
    // = track_length / 3. The hexagon center is placed on the +x axis through
    // the BS (origin) with the walked edges bulging away from it, so the route
    // is mirror-symmetric about a line through the BS; the whole construction
    // is then rotated about the BS so the first vertex lands on the start
    // position. The turn sign selects the mirror image.
    const double side = config.track_length_m / 3.0;
    const double d0 = config.tr_separation_2d_m;
    if (d0 <= side)
        throw std::invalid_argument(
            "half-hexagon track needs tr_separation_2d_m > track_length_m / 3");
    const double cx = std::sqrt(d0 * d0 - side * side);
    const double apothem = side * std::sqrt(3.0) / 2.0;
    const double turn = (config.hexagon_turn == TurnDirection::Left) ? 1.0 : -1.0;

    std::vector<Vec2> v = {
        {cx, -turn * side},
        {cx + apothem, -turn * side / 2.0},
        {cx + apothem, turn * side / 2.0},
        {cx, turn * side},
    };
    const double alpha = turn * std::atan2(side, cx);
    for (auto& p : v)
        p = rotate(p, alpha);
    return v;
}

Trajectory generate_trajectory(const SimulationConfig& config)
{
    const std::vector<Vec2> poly = build_track_polyline(config);

    // Cumulative arc length at each vertex and per-segment headings.
    std::vector<double> acc(poly.size(), 0.0);
    std::vector<Vec2> dir(poly.size() - 1);
    std::vector<double> heading(poly.size() - 1);
    for (std::size_t i = 0; i + 1 < poly.size(); ++i)
    {
        const Vec2 d = poly[i + 1] - poly[i];
        const double len = norm(d);
        acc[i + 1] = acc[i] + len;
        dir[i] = (1.0 / len) * d;
        heading[i] = std::atan2(d.y, d.x);
    }

    const int count = static_cast<int>(std::floor(config.track_length_m / config.update_distance_m + 1e-9));
    Trajectory traj;
    traj.update_interval_s = config.update_interval_s();
    traj.points.reserve(static_cast<std::size_t>(count));

    std::size_t seg = 0;
    for (int k = 0; k < count; ++k)
    {
        const double s = k * config.update_distance_m;
        // Walk forward to the segment containing arc length s; a point landing
        // exactly on a corner belongs to the outgoing segment.
        while (seg + 1 < dir.size() && s >= acc[seg + 1] - 1e-12)
            ++seg;
        TrajectoryPoint p;
        p.time_s = k * traj.update_interval_s;
        p.position = poly[seg] + (s - acc[seg]) * dir[seg];
        p.heading_rad = heading[seg];
        traj.points.push_back(p);
    }
    return traj;
}

} // namespace scsim
