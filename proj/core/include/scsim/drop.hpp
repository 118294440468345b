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
// Anchor drop: the static time-cluster channel realization at the track
// start, from which the run then evolves.

#ifndef SCSIM_DROP_HPP
#define SCSIM_DROP_HPP

#include <span>

#include "scsim/channel.hpp"
#include "scsim/config.hpp"
#include "scsim/rng.hpp"

namespace scsim
{

// Distributes total_power_mw over the clusters and subpaths:
//   cluster weight  ~ exp(-tau_n / cluster_decay) * 10^(Z_n / 10)
//   subpath weight  ~ exp(-offset / subpath_decay) * 10^(U / 10)
// (offset = delay within the cluster). Weights are normalized to fractions,
// so the subpath powers sum to total_power_mw. Shadowing values are in dB,
// one per cluster and one per subpath. Throws NonPositiveTotalPowerError.
void allocate_powers(std::vector<TimeCluster>& clusters, double total_power_mw,
                     std::span<const double> cluster_shadow_db,
                     const std::vector<std::vector<double>>& subpath_shadow_db,
                     double cluster_decay_ns, double subpath_decay_ns);

// Generates the t = 0 omnidirectional channel snapshot at the track start.
// Draw order (fixed for reproducibility): cluster count, per-cluster subpath
// counts, cluster inter-arrival delays, per-cluster subpath delay gaps,
// per-subpath angles and phases, per-cluster and per-subpath shadowing.
// In LOS state a zero-delay LOS component with the exact geometric bearings
// is prepended to the first cluster. sf_db enters the path-loss term only.
ChannelSnapshot generate_initial_drop(const SimulationConfig& config, LosState los_state,
                                      Pcg32& rng, double sf_db = 0.0);

} // namespace scsim

#endif
