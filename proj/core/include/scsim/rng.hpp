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
// Seeded, portable random number generation. One PCG32 engine per purpose,
// derived deterministically from (run seed, purpose, index), so adding a new
// consumer never perturbs the draws of existing ones. All distributions are
// generated by fixed algorithms on top of the raw bit stream; none of the
// implementation-defined std:: distributions are used.

#ifndef SCSIM_RNG_HPP
#define SCSIM_RNG_HPP

#include <cmath>
#include <cstdint>

#include "scsim/geometry.hpp"

namespace scsim
{

// Stream purposes. The numeric values are part of the reproducibility
// contract; never reorder, only append.
enum class RngPurpose : std::uint64_t
{
    LosMap = 1,          // i.i.d. fill of the LOS condition field
    ClusterShadowMap = 2, // per-cluster shadowing fields (index = cluster)
    SubpathShadowMap = 3, // per-cluster subpath shadowing fields (index = cluster)
    Drop = 4,            // anchor channel drop
    ReflectionAngles = 5, // per-subpath reflection surface angles
    PathShadow = 6,      // scalar shadow-fading draw for the path-loss term
    SampleOffsets = 7,   // per-subpath shadow-map sampling offsets
};

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Minimal PCG32 (XSH-RR 64/32).
class Pcg32
{
public:
    Pcg32() : Pcg32(0x853c49e6748fea9bULL, 0xda3e39cb94b95bdbULL) {}

    Pcg32(std::uint64_t initstate, std::uint64_t initseq)
    {
        state_ = 0u;
        inc_ = (initseq << 1u) | 1u;
        next_u32();
        state_ += initstate;
        next_u32();
    }

    std::uint32_t next_u32()
    {
        const std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        const std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform01()
    {
        const std::uint64_t hi = next_u32() >> 5;  // 27 bits
        const std::uint64_t lo = next_u32() >> 6;  // 26 bits
        return static_cast<double>((hi << 26) | lo) * (1.0 / 9007199254740992.0);
    }

    // Uniform integer in [lo, hi], inclusive.
    int uniform_int(int lo, int hi)
    {
        const double span = static_cast<double>(hi - lo + 1);
        int k = static_cast<int>(uniform01() * span);
        if (k > hi - lo)
            k = hi - lo;
        return lo + k;
    }

    // Standard normal via Box-Muller (the second variate is discarded).
    double normal()
    {
        const double u1 = 1.0 - uniform01(); // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

    // Exponential with the given mean.
    double exponential(double mean)
    {
        return -mean * std::log(1.0 - uniform01());
    }

    // Zero-mean Laplace with the given scale.
    double laplace(double scale)
    {
        const double u = uniform01() - 0.5;
        const double s = (u < 0.0) ? -1.0 : 1.0;
        return -scale * s * std::log(1.0 - 2.0 * std::fabs(u));
    }

    // Uniform azimuth in (-pi, pi].
    double uniform_azimuth() { return kPi - kTwoPi * uniform01(); }

    // Uniform zenith-type angle in (-pi/2, pi/2].
    double uniform_half_angle() { return 0.5 * kPi - kPi * uniform01(); }

    // Uniform phase in [0, 2*pi).
    double uniform_phase() { return kTwoPi * uniform01(); }

private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

// Derive the engine for (seed, purpose, index).
inline Pcg32 make_stream(std::uint64_t seed, RngPurpose purpose, std::uint64_t index = 0)
{
    const std::uint64_t p = static_cast<std::uint64_t>(purpose);
    const std::uint64_t initstate = splitmix64(seed ^ splitmix64(p * 0xa0761d6478bd642fULL));
    const std::uint64_t initseq = splitmix64(initstate ^ splitmix64(index * 0xe7037ed1a0b428dbULL));
    return Pcg32(initstate, initseq);
}

} // namespace scsim

#endif
