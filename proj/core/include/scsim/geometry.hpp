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

#ifndef SCSIM_GEOMETRY_HPP
#define SCSIM_GEOMETRY_HPP

#include <cmath>

namespace scsim
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Vec2
{
    double x = 0.0;
    double y = 0.0;
};

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }

// Unit vector for a planar heading angle (counterclockwise from +x).
inline Vec2 heading_unit(double heading_rad)
{
    return {std::cos(heading_rad), std::sin(heading_rad)};
}

inline Vec2 rotate(Vec2 p, double angle_rad)
{
    const double c = std::cos(angle_rad), s = std::sin(angle_rad);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Azimuth of the direction from `from` to `to`.
inline double bearing(Vec2 from, Vec2 to)
{
    return std::atan2(to.y - from.y, to.x - from.x);
}

// Wrap an azimuth into (-pi, pi].
inline double wrap_azimuth(double a)
{
    double y = std::fmod(a + kPi, kTwoPi);
    if (y <= 0.0)
        y += kTwoPi;
    return y - kPi;
}

// Wrap a phase into [0, 2*pi).
inline double wrap_phase(double p)
{
    double y = std::fmod(p, kTwoPi);
    if (y < 0.0)
        y += kTwoPi;
    return y;
}

// Direction-of-travel unit vector in 3-D for a (azimuth, zenith) pair.
// Zenith is measured from the +z axis, so the horizon is at pi/2.
inline Vec3 spherical_unit(double azimuth_rad, double zenith_rad)
{
    const double sz = std::sin(zenith_rad);
    return {sz * std::cos(azimuth_rad), sz * std::sin(azimuth_rad), std::cos(zenith_rad)};
}

// mW <-> dBm
inline double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }
inline double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

} // namespace scsim

#endif
