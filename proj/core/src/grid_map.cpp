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

#include "scsim/grid_map.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "scsim/csv.hpp"

namespace scsim
{

GridSpec grid_from_extent(Vec2 origin, double extent_x_m, double extent_y_m, double resolution_m)
{
    GridSpec spec;
    spec.origin = origin;
    spec.resolution_m = resolution_m;
    spec.width = std::max(2, static_cast<int>(std::floor(extent_x_m / resolution_m + 1e-9)) + 1);
    spec.height = std::max(2, static_cast<int>(std::floor(extent_y_m / resolution_m + 1e-9)) + 1);
    return spec;
}

CorrelatedGridMap build_iid_map(const GridSpec& spec, Pcg32& rng)
{
    if (spec.width < 2 || spec.height < 2)
        throw ExtentTooSmallError("grid must be at least 2x2 points");
    CorrelatedGridMap map;
    map.origin = spec.origin;
    map.resolution_m = spec.resolution_m;
    map.width = spec.width;
    map.height = spec.height;
    map.kind = FieldKind::GaussianUnit;
    map.values.resize(static_cast<std::size_t>(spec.width) * spec.height);
    for (auto& v : map.values)
        v = rng.normal();
    return map;
}

CorrelatedGridMap filter_exponential(const CorrelatedGridMap& in, double delta_d_m,
                                     const FilterOptions& options)
{
    if (delta_d_m <= 0.0)
        throw std::invalid_argument("correlation distance must be positive");

    // Precompute the truncated kernel. Taps are kept for grid-point distances
    // up to truncation_factor * delta_d (weight e^-3 at the default radius).
    const double radius_m = options.truncation_factor * delta_d_m;
    const int r = static_cast<int>(std::floor(radius_m / in.resolution_m + 1e-9));
    const int ksize = 2 * r + 1;
    std::vector<double> kernel(static_cast<std::size_t>(ksize) * ksize, 0.0);
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx)
        {
            const double dist = in.resolution_m * std::sqrt(double(dx) * dx + double(dy) * dy);
            if (dist <= radius_m + 1e-12)
                kernel[static_cast<std::size_t>(dy + r) * ksize + (dx + r)] =
                    std::exp(-dist / delta_d_m);
        }

    CorrelatedGridMap out = in;
    out.correlation_distance_m = delta_d_m;

    // Cells outside the grid contribute zero. Output cells are independent,
    // so rows are distributed over threads; the per-cell summation order is
    // fixed, keeping the result identical for any thread count.
    auto filter_rows = [&](int y0, int y1)
    {
        for (int y = y0; y < y1; ++y)
            for (int x = 0; x < in.width; ++x)
            {
                const int dy_lo = std::max(-r, -y), dy_hi = std::min(r, in.height - 1 - y);
                const int dx_lo = std::max(-r, -x), dx_hi = std::min(r, in.width - 1 - x);
                double sum = 0.0;
                for (int dy = dy_lo; dy <= dy_hi; ++dy)
                {
                    const double* krow = &kernel[static_cast<std::size_t>(dy + r) * ksize + r];
                    const double* vrow =
                        &in.values[static_cast<std::size_t>(y + dy) * in.width + x];
                    for (int dx = dx_lo; dx <= dx_hi; ++dx)
                        sum += krow[dx] * vrow[dx];
                }
                out.values[static_cast<std::size_t>(y) * in.width + x] = sum;
            }
    };

    int n_threads = options.threads > 0 ? options.threads
                                        : static_cast<int>(std::thread::hardware_concurrency());
    n_threads = std::clamp(n_threads, 1, std::max(1, in.height / 8));
    if (n_threads <= 1)
    {
        filter_rows(0, in.height);
    }
    else
    {
        std::vector<std::thread> workers;
        const int rows_per = (in.height + n_threads - 1) / n_threads;
        for (int t = 0; t < n_threads; ++t)
        {
            const int y0 = t * rows_per;
            const int y1 = std::min(in.height, y0 + rows_per);
            if (y0 < y1)
                workers.emplace_back(filter_rows, y0, y1);
        }
        for (auto& w : workers)
            w.join();
    }

    if (options.normalize)
    {
        double mean = 0.0;
        for (double v : out.values)
            mean += v;
        mean /= static_cast<double>(out.values.size());
        double var = 0.0;
        for (double v : out.values)
            var += (v - mean) * (v - mean);
        var /= static_cast<double>(out.values.size());
        const double inv_std = 1.0 / std::sqrt(var);
        for (double& v : out.values)
            v = (v - mean) * inv_std;
    }
    return out;
}

CorrelatedGridMap build_correlated_map(const GridSpec& spec, double delta_d_m, Pcg32& rng,
                                       const FilterOptions& options)
{
    const CorrelatedGridMap iid = build_iid_map(spec, rng);
    return filter_exponential(iid, delta_d_m, options);
}

double sample_map(const CorrelatedGridMap& map, Vec2 position)
{
    if (!map.contains(position))
    {
        std::ostringstream os;
        os << "position (" << position.x << ", " << position.y << ") outside map extent ["
           << map.origin.x << ", " << map.max_corner().x << "] x [" << map.origin.y << ", "
           << map.max_corner().y << "]";
        throw OutOfExtentError(os.str());
    }
    const double fx = (position.x - map.origin.x) / map.resolution_m;
    const double fy = (position.y - map.origin.y) / map.resolution_m;
    int ix = static_cast<int>(std::floor(fx));
    int iy = static_cast<int>(std::floor(fy));
    ix = std::clamp(ix, 0, map.width - 2);
    iy = std::clamp(iy, 0, map.height - 2);
    const double tx = fx - ix;
    const double ty = fy - iy;
    const double v00 = map.at(ix, iy), v10 = map.at(ix + 1, iy);
    const double v01 = map.at(ix, iy + 1), v11 = map.at(ix + 1, iy + 1);
    return (1.0 - ty) * ((1.0 - tx) * v00 + tx * v10) + ty * ((1.0 - tx) * v01 + tx * v11);
}

std::string map_to_csv(const CorrelatedGridMap& map)
{
    std::string out;
    out += "origin_x_m,origin_y_m,resolution_m,width,height\n";
    out += format_g9(map.origin.x) + "," + format_g9(map.origin.y) + "," +
           format_g9(map.resolution_m) + "," + std::to_string(map.width) + "," +
           std::to_string(map.height) + "\n";
    for (int y = 0; y < map.height; ++y)
    {
        for (int x = 0; x < map.width; ++x)
        {
            if (x)
                out += ',';
            out += format_g9(map.at(x, y));
        }
        out += '\n';
    }
    return out;
}

} // namespace scsim
