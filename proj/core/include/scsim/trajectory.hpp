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

#ifndef SCSIM_TRAJECTORY_HPP
#define SCSIM_TRAJECTORY_HPP

#include <vector>

#include "scsim/config.hpp"
#include "scsim/geometry.hpp"

namespace scsim
{

struct TrajectoryPoint
{
    double time_s = 0.0;
    Vec2 position;
    double heading_rad = 0.0; // direction of travel leaving this point
};

struct Trajectory
{
    std::vector<TrajectoryPoint> points;
    double update_interval_s = 0.0;
};

// Vertices of the track polyline. Linear tracks have two vertices; the
// half-hexagon has four (three equal edges of a regular hexagon, joined by
// two same-direction 60 degree turns). The hexagon is positioned so that the
// base station lies on the symmetry axis of the walk and the route bulges
// away from it, which makes the BS-UT distance profile symmetric about the
// track midpoint.
std::vector<Vec2> build_track_polyline(const SimulationConfig& config);

// Samples the track every update_distance_m of arc length, starting at the
// track start (t = 0). Point count = floor(track_length / update_distance).
// Deterministic and RNG-free.
Trajectory generate_trajectory(const SimulationConfig& config);

} // namespace scsim

#endif
