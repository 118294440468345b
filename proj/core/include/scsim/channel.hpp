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

#ifndef SCSIM_CHANNEL_HPP
#define SCSIM_CHANNEL_HPP

#include <vector>

#include "scsim/geometry.hpp"
#include "scsim/los.hpp"

namespace scsim
{

// One multipath component.
struct Subpath
{
    double excess_delay_ns = 0.0; // relative to the earliest arrival
    double power_mw = 0.0;        // linear received power
    double phase_rad = 0.0;       // in [0, 2*pi)
    double aod_az_rad = 0.0;      // azimuth of departure, (-pi, pi]
    double aoa_az_rad = 0.0;      // azimuth of arrival, (-pi, pi]
    double zod_rad = 0.0;         // zenith of departure, (0, pi)
    double zoa_rad = 0.0;         // zenith of arrival, (0, pi)
    bool is_los_component = false;
};

// A group of subpaths arriving close in excess delay.
struct TimeCluster
{
    std::vector<Subpath> subpaths; // ordered by excess delay, strictly increasing
    double cluster_shadow_db = 0.0; // shadowing realization of this cluster

    double cluster_excess_delay_ns() const
    {
        return subpaths.empty() ? 0.0 : subpaths.front().excess_delay_ns;
    }

    double power_mw() const
    {
        double p = 0.0;
        for (const auto& sp : subpaths)
            p += sp.power_mw;
        return p;
    }
};

// The channel impulse response at one instant.
struct ChannelSnapshot
{
    double time_s = 0.0;
    Vec2 ut_position;
    LosState los_state = LosState::Nlos;
    double path_loss_db = 0.0;
    double total_received_power_mw = 0.0;
    std::vector<TimeCluster> clusters;

    double sum_subpath_power_mw() const
    {
        double p = 0.0;
        for (const auto& c : clusters)
            p += c.power_mw();
        return p;
    }

    std::size_t subpath_count() const
    {
        std::size_t n = 0;
        for (const auto& c : clusters)
            n += c.subpaths.size();
        return n;
    }
};

} // namespace scsim

#endif
