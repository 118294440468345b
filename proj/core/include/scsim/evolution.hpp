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
// Per-step channel evolution along the trajectory. Angles drift linearly
// between re-anchorings,
//
//     theta(t) = theta(t0) + S * (t - t0),
//
// with per-subpath drift rates (anchored at t0, speed v, heading phi_v):
//
//     S_AOD =  v * sin(phi_v - phi_AOD + psi_AOD) / d_2D
//     S_ZOD = -v * cos(phi_v - phi_AOD + psi_ZOD) / d_3D
//     S_AOA = -v * sin(phi_v - phi_AOA + psi_AOA) / d_2D
//     S_ZOA = -v * cos(phi_v - phi_AOA + psi_ZOA) / d_3D
//
// psi are fixed per-subpath reflection-surface angles (zero for the LOS
// component). Rates are re-anchored at every trajectory update.

#ifndef SCSIM_EVOLUTION_HPP
#define SCSIM_EVOLUTION_HPP

#include <cstdint>

#include "scsim/channel.hpp"
#include "scsim/config.hpp"
#include "scsim/drop.hpp"
#include "scsim/sf_maps.hpp"
#include "scsim/trajectory.hpp"

namespace scsim
{

struct AngleSet
{
    double aod_az = 0.0;
    double zod = 0.0;
    double aoa_az = 0.0;
    double zoa = 0.0;
};

// Reflection-surface angles; azimuth entries in (-pi, pi], zenith entries in
// (-pi/2, pi/2], all zero for the LOS component.
using ReflectionAngles = AngleSet;
using AngleRates = AngleSet;

struct SubpathEvolution
{
    ReflectionAngles psi;
    AngleRates rates;     // anchored at the last update
    Vec2 shadow_offset;   // fixed per-subpath sampling offset into the U field
};

struct StepCounters
{
    std::uint64_t delay_clamps = 0;
    std::uint64_t azimuth_wraps = 0;
    std::uint64_t zenith_reflections = 0;
    std::uint64_t los_transitions = 0;
    double max_delay_step_ns = 0.0; // largest |delta tau| applied by a delay update
};

struct EvolutionState
{
    std::vector<std::vector<SubpathEvolution>> subpaths; // parallels snapshot clusters
    LosState last_state = LosState::Nlos;
    double path_shadow_z = 0.0; // standard normal draw behind the path-loss SF term
    Vec2 los_shadow_offset;     // reserved U-field offset for the LOS component
    StepCounters counters;
};

// Drift rates of the four angles for one subpath (angles at the anchor time).
// Throws DegenerateGeometryError when d_2d is not positive.
AngleRates compute_slopes(const Subpath& subpath, const ReflectionAngles& psi, double speed_mps,
                          double heading_rad, double d_2d_m, double d_3d_m);

// Advances the angles of one subpath by dt at the given rates. Azimuths wrap
// into (-pi, pi]; zeniths reflect at the poles, shifting the corresponding
// azimuth by pi.
void advance_angles(Subpath& subpath, const AngleRates& rates, double dt_s,
                    StepCounters& counters);

// Delay update for the move described by velocity_mps over dt_s, using the
// angles currently stored in the snapshot. Each subpath delay changes by
// -(r_hat . v) * dt / c, where r_hat is its arrival direction; excess delays
// are then re-referenced so the earliest is zero (the LOS component, when
// present, stays pinned at zero) and negative remainders clamp to zero.
void update_delays(ChannelSnapshot& snapshot, Vec3 velocity_mps, double dt_s,
                   StepCounters& counters);

// Doppler phase advance: -2*pi*(f/c)*(r_hat . v)*dt per subpath, wrapped to
// [0, 2*pi). Uses the same arrival directions as the delay update, so call it
// with the pre-advance angles.
void update_phases(ChannelSnapshot& snapshot, Vec3 velocity_mps,
                   const std::vector<std::vector<Vec3>>& arrival_dirs, double dt_s,
                   double frequency_hz);

// Samples each cluster's Z and each subpath's U from the correlated shadowing
// fields at the current position and reallocates powers against the new
// total. Propagates OutOfExtentError.
void update_powers(ChannelSnapshot& snapshot, const EvolutionState& state, const SfMaps& maps,
                   Vec2 position, double total_power_mw, const SimulationConfig& config);

// Draws the per-subpath reflection angles and shadow-sampling offsets and
// anchors the initial drift rates. psi streams: (seed, ReflectionAngles);
// offsets: (seed, SampleOffsets).
EvolutionState make_evolution_state(const ChannelSnapshot& snapshot,
                                    const SimulationConfig& config,
                                    const TrajectoryPoint& start, std::uint64_t seed,
                                    double path_shadow_z);

struct SimMaps
{
    CorrelatedGridMap los_field;
    SfMaps sf;
};

// One trajectory update: LOS condition at the new position, path loss,
// delay update with the previous angles, LOS component insertion/removal on
// state flips, power reallocation, angle advance + re-anchoring of the drift
// rates at the new position, and phase advance.
void step(ChannelSnapshot& snapshot, EvolutionState& state, const TrajectoryPoint& point,
          const SimMaps& maps, const SimulationConfig& config);

} // namespace scsim

#endif
