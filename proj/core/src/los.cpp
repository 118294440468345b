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

#include "scsim/los.hpp"

#include <cmath>

namespace scsim
{

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x * 0.7071067811865475244);
}

double los_probability(Scenario scenario, double d_2d_m)
{
    const double d = d_2d_m;
    switch (scenario)
    {
    case Scenario::UMi:
        if (d <= 18.0)
            return 1.0;
        return std::min(18.0 / d, 1.0) * (1.0 - std::exp(-d / 36.0)) + std::exp(-d / 36.0);
    case Scenario::UMa:
        if (d <= 18.0)
            return 1.0;
        return 18.0 / d + std::exp(-d / 63.0) * (1.0 - 18.0 / d);
    case Scenario::RMa:
        if (d <= 10.0)
            return 1.0;
        return std::exp(-(d - 10.0) / 1000.0);
    }
    return 1.0;
}

LosState assign_los_state(const CorrelatedGridMap& gauss_map, Vec2 bs_position, Vec2 position,
                          Scenario scenario)
{
    const double d_2d = norm(position - bs_position);
    const double u = normal_cdf(sample_map(gauss_map, position));
    return u < los_probability(scenario, d_2d) ? LosState::Los : LosState::Nlos;
}

LosStateMap make_los_state_map(const CorrelatedGridMap& gauss_map, Vec2 bs_position,
                               Scenario scenario)
{
    LosStateMap state_map;
    state_map.bs_position = bs_position;
    state_map.underlying = gauss_map;
    state_map.underlying.kind = FieldKind::Binary;
    for (int y = 0; y < gauss_map.height; ++y)
        for (int x = 0; x < gauss_map.width; ++x)
        {
            const Vec2 cell = {gauss_map.origin.x + x * gauss_map.resolution_m,
                               gauss_map.origin.y + y * gauss_map.resolution_m};
            const double u = normal_cdf(gauss_map.at(x, y));
            const double p = los_probability(scenario, norm(cell - bs_position));
            state_map.underlying.at(x, y) = (u < p) ? 1.0 : 0.0;
        }
    return state_map;
}

} // namespace scsim
