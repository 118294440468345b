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

#include "scsim/sf_maps.hpp"

#include <algorithm>
#include <cmath>

namespace scsim
{

namespace
{

struct Box
{
    Vec2 lo, hi;
};

Box trajectory_box(const Trajectory& trajectory)
{
    Box b{trajectory.points.front().position, trajectory.points.front().position};
    for (const auto& p : trajectory.points)
    {
        b.lo.x = std::min(b.lo.x, p.position.x);
        b.lo.y = std::min(b.lo.y, p.position.y);
        b.hi.x = std::max(b.hi.x, p.position.x);
        b.hi.y = std::max(b.hi.y, p.position.y);
    }
    return b;
}

} // namespace

GridSpec los_grid_spec(const SimulationConfig& config, const Trajectory& trajectory)
{
    const double margin =
        std::max(config.correlation_distance_los_m, config.correlation_distance_sf_m);
    Box b = trajectory_box(trajectory);
    b.lo.x = std::min(b.lo.x, config.bs_position().x);
    b.lo.y = std::min(b.lo.y, config.bs_position().y);
    b.hi.x = std::max(b.hi.x, config.bs_position().x);
    b.hi.y = std::max(b.hi.y, config.bs_position().y);

    Vec2 origin = {b.lo.x - margin, b.lo.y - margin};
    double ext_x = (b.hi.x - b.lo.x) + 2.0 * margin;
    double ext_y = (b.hi.y - b.lo.y) + 2.0 * margin;
    if (config.map_extent_x_m > 0.0 && config.map_extent_y_m > 0.0)
    {
        // Explicit extent, centered on the auto box.
        const Vec2 center = {0.5 * (b.lo.x + b.hi.x), 0.5 * (b.lo.y + b.hi.y)};
        origin = {center.x - 0.5 * config.map_extent_x_m, center.y - 0.5 * config.map_extent_y_m};
        ext_x = config.map_extent_x_m;
        ext_y = config.map_extent_y_m;
    }
    return grid_from_extent(origin, ext_x, ext_y, config.map_resolution_m);
}

GridSpec sf_grid_spec(const SimulationConfig& config, const Trajectory& trajectory)
{
    const Box b = trajectory_box(trajectory);
    const Vec2 center = {0.5 * (b.lo.x + b.hi.x), 0.5 * (b.lo.y + b.hi.y)};
    // Subpath shadow sampling displaces positions by up to one correlation
    // distance, so keep twice that as margin around the track.
    const double margin = 2.0 * config.correlation_distance_sf_m;
    const double need_x = (b.hi.x - b.lo.x) + 2.0 * margin;
    const double need_y = (b.hi.y - b.lo.y) + 2.0 * margin;
    const double side = std::max({config.sf_map_extent_m, need_x, need_y});
    const Vec2 origin = {center.x - 0.5 * side, center.y - 0.5 * side};
    return grid_from_extent(origin, side, side, config.map_resolution_m);
}

SfMaps build_sf_maps(const SimulationConfig& config, const Trajectory& trajectory,
                     std::size_t n_clusters, std::uint64_t seed)
{
    const GridSpec spec = sf_grid_spec(config, trajectory);
    SfMaps maps;
    maps.cluster_shadow.reserve(n_clusters);
    maps.subpath_shadow.reserve(n_clusters);
    for (std::size_t n = 0; n < n_clusters; ++n)
    {
        Pcg32 rng_z = make_stream(seed, RngPurpose::ClusterShadowMap, n);
        maps.cluster_shadow.push_back(
            build_correlated_map(spec, config.correlation_distance_sf_m, rng_z));
        Pcg32 rng_u = make_stream(seed, RngPurpose::SubpathShadowMap, n);
        maps.subpath_shadow.push_back(
            build_correlated_map(spec, config.correlation_distance_sf_m, rng_u));
    }
    return maps;
}

} // namespace scsim
