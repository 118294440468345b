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
//
// Spatially correlated random fields on a regular grid. A grid of i.i.d.
// standard normal draws is convolved with the exponential kernel
//
//     h(p, q) = exp(-dist(p, q) / delta_d)
//
// where dist is the Euclidean distance in meters between grid points and
// delta_d the correlation distance. The kernel is truncated at 3*delta_d
// (weight e^-3), cells outside the grid contribute zero, and the filtered
// field is renormalized to zero mean and unit variance.

#ifndef SCSIM_GRID_MAP_HPP
#define SCSIM_GRID_MAP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "scsim/errors.hpp"
#include "scsim/geometry.hpp"
#include "scsim/rng.hpp"

namespace scsim
{

enum class FieldKind
{
    GaussianUnit,
    Binary,
};

struct GridSpec
{
    Vec2 origin;              // position of cell (0, 0)
    double resolution_m = 1.0; // grid point spacing
    int width = 0;            // points along x
    int height = 0;           // points along y
};

// Grid spec covering [origin, origin + extent] inclusive at the given
// resolution, with at least 2 points per axis.
GridSpec grid_from_extent(Vec2 origin, double extent_x_m, double extent_y_m, double resolution_m);

struct CorrelatedGridMap
{
    Vec2 origin;
    double resolution_m = 1.0;
    int width = 0;
    int height = 0;
    std::vector<double> values; // row-major, index = iy * width + ix
    double correlation_distance_m = 0.0;
    FieldKind kind = FieldKind::GaussianUnit;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * width + ix]; }
    double& at(int ix, int iy) { return values[static_cast<std::size_t>(iy) * width + ix]; }

    Vec2 max_corner() const
    {
        return {origin.x + resolution_m * (width - 1), origin.y + resolution_m * (height - 1)};
    }

    bool contains(Vec2 p) const
    {
        const Vec2 c = max_corner();
        return p.x >= origin.x && p.x <= c.x && p.y >= origin.y && p.y <= c.y;
    }
};

struct FilterOptions
{
    double truncation_factor = 3.0; // kernel radius in units of delta_d
    bool normalize = true;          // zero mean / unit variance after filtering
    int threads = 0;                // 0 = hardware concurrency
};

// Fills a grid with i.i.d. standard normal draws (row-major order).
CorrelatedGridMap build_iid_map(const GridSpec& spec, Pcg32& rng);

// Convolves a map with the truncated exponential kernel. Output cells depend
// only on input cells, so the operation is parallelized over rows without
// changing the result. No normalization is applied here.
CorrelatedGridMap filter_exponential(const CorrelatedGridMap& in, double delta_d_m,
                                     const FilterOptions& options = {});

// i.i.d. fill + exponential filter + renormalization to zero mean and unit
// variance. Throws ExtentTooSmallError for grids under 2x2.
CorrelatedGridMap build_correlated_map(const GridSpec& spec, double delta_d_m, Pcg32& rng,
                                       const FilterOptions& options = {});

// Bilinear interpolation of the four surrounding grid points. Positions at
// grid points return the stored value exactly. Throws OutOfExtentError.
double sample_map(const CorrelatedGridMap& map, Vec2 position);

// CSV export: one header line (origin, resolution, dimensions), one line with
// their values, then `height` rows of `width` comma-separated values.
std::string map_to_csv(const CorrelatedGridMap& map);

} // namespace scsim

#endif
