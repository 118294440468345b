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

#ifndef SCSIM_SF_MAPS_HPP
#define SCSIM_SF_MAPS_HPP

#include <cstdint>
#include <vector>

#include "scsim/config.hpp"
#include "scsim/grid_map.hpp"
#include "scsim/trajectory.hpp"

namespace scsim
{

// Correlated shadowing fields: one field per cluster for the cluster
// shadowing Z_n and one per cluster for the subpath shadowing U. Sampling a
// field at a position and scaling by sigma_z (resp. sigma_u) in dB yields the
// correlated shadowing value there.
struct SfMaps
{
    std::vector<CorrelatedGridMap> cluster_shadow; // Z_n, one per cluster
    std::vector<CorrelatedGridMap> subpath_shadow; // U, one per cluster
};

// Extent of the shadowing fields: a square of at least sf_map_extent_m per
// side centered on the trajectory midpoint, grown so every trajectory point
// keeps a margin of 2x the SF correlation distance (subpath sampling offsets
// use up to one correlation distance of it).
GridSpec sf_grid_spec(const SimulationConfig& config, const Trajectory& trajectory);

// Extent of the LOS condition field: bounding box of the BS and every
// trajectory point, inflated by one correlation distance on each side, unless
// the config gives an explicit extent.
GridSpec los_grid_spec(const SimulationConfig& config, const Trajectory& trajectory);

// Builds the per-cluster shadowing fields. Each field has its own RNG
// substream keyed by (seed, purpose, cluster index), so the number of
// clusters never perturbs other streams.
SfMaps build_sf_maps(const SimulationConfig& config, const Trajectory& trajectory,
                     std::size_t n_clusters, std::uint64_t seed);

} // namespace scsim

#endif
