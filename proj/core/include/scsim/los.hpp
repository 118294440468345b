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

#ifndef SCSIM_LOS_HPP
#define SCSIM_LOS_HPP

#include "scsim/config.hpp"
#include "scsim/grid_map.hpp"

namespace scsim
{

enum class LosState
{
    Los,
    Nlos,
};

inline const char* to_string(LosState s) { return s == LosState::Los ? "LOS" : "NLOS"; }

// Standard normal CDF.
double normal_cdf(double x);

// Distance-dependent LOS probability per scenario (2-D distance in meters).
// UMi:  1 for d <= 18, else (18/d)(1 - e^(-d/36)) + e^(-d/36)
// UMa:  1 for d <= 18, else 18/d + e^(-d/63)(1 - 18/d)   (terminal below 13 m)
// RMa:  1 for d <= 10, else e^(-(d-10)/1000)
double los_probability(Scenario scenario, double d_2d_m);

// Correlated LOS/NLOS condition: the Gaussian field value at `position` is
// mapped through the normal CDF to a correlated uniform variate u, and the
// state is LOS iff u < P_LOS(d_2d). Monotone in the field value.
LosState assign_los_state(const CorrelatedGridMap& gauss_map, Vec2 bs_position, Vec2 position,
                          Scenario scenario);

struct LosStateMap
{
    CorrelatedGridMap underlying; // Binary field, 1 = LOS
    Vec2 bs_position;
};

// Thresholds a Gaussian field cell by cell into a Binary LOS condition map.
LosStateMap make_los_state_map(const CorrelatedGridMap& gauss_map, Vec2 bs_position,
                               Scenario scenario);

} // namespace scsim

#endif
