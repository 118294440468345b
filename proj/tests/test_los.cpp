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

#include <doctest.h>

#include <cmath>

#include "scsim/los.hpp"

using namespace scsim;

namespace
{

CorrelatedGridMap constant_map(double value, int w = 8, int h = 8)
{
    CorrelatedGridMap m;
    m.origin = {-100.0, -100.0};
    m.resolution_m = 30.0;
    m.width = w;
    m.height = h;
    m.values.assign(static_cast<std::size_t>(w) * h, value);
    return m;
}

} // namespace

TEST_CASE("LOS probability values")
{
    // d <= 18 m collapses every scenario's azimuth term to 1
    CHECK(los_probability(Scenario::UMi, 10.0) == 1.0);
    CHECK(los_probability(Scenario::UMi, 18.0) == 1.0);
    // 0.36*(1 - e^(-50/36)) + e^(-50/36) = 0.5195985
    CHECK(los_probability(Scenario::UMi, 50.0) == doctest::Approx(0.5195985).epsilon(1e-6));
    CHECK(los_probability(Scenario::UMa, 18.0) == 1.0);
    // 18/50 + e^(-50/63)*(1 - 18/50)
    const double uma50 = 0.36 + std::exp(-50.0 / 63.0) * 0.64;
    CHECK(los_probability(Scenario::UMa, 50.0) == doctest::Approx(uma50).epsilon(1e-12));
    CHECK(los_probability(Scenario::RMa, 10.0) == 1.0);
    CHECK(los_probability(Scenario::RMa, 110.0) == doctest::Approx(std::exp(-0.1)).epsilon(1e-12));
}

TEST_CASE("normal cdf reference values")
{
    CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(normal_cdf(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-12));
    CHECK(normal_cdf(-1.959963984540054) == doctest::Approx(0.025).epsilon(1e-9));
}

TEST_CASE("inside 18 m the state is LOS regardless of the field value")
{
    const Vec2 bs{0.0, 0.0};
    for (double v : {-10.0, -1.0, 0.0, 1.0, 10.0})
    {
        const CorrelatedGridMap m = constant_map(v);
        CHECK(assign_los_state(m, bs, {10.0, 0.0}, Scenario::UMi) == LosState::Los);
        CHECK(assign_los_state(m, bs, {0.0, 17.9}, Scenario::UMi) == LosState::Los);
    }
}

TEST_CASE("extreme field values pin the state at 50 m")
{
    const Vec2 bs{0.0, 0.0};
    const Vec2 p{50.0, 0.0};
    // u -> 1 crosses the 0.52 threshold: NLOS
    CHECK(assign_los_state(constant_map(10.0), bs, p, Scenario::UMi) == LosState::Nlos);
    // u -> 0: LOS
    CHECK(assign_los_state(constant_map(-10.0), bs, p, Scenario::UMi) == LosState::Los);
}

TEST_CASE("assign_los_state is monotone in the field value")
{
    const Vec2 bs{0.0, 0.0};
    Pcg32 rng = make_stream(3, RngPurpose::LosMap);
    for (int i = 0; i < 200; ++i)
    {
        const double d = 19.0 + 180.0 * rng.uniform01();
        const double v_lo = -3.0 + 6.0 * rng.uniform01();
        const double v_hi = v_lo + 3.0 * rng.uniform01();
        const LosState lo = assign_los_state(constant_map(v_lo), bs, {d, 0.0}, Scenario::UMi);
        const LosState hi = assign_los_state(constant_map(v_hi), bs, {d, 0.0}, Scenario::UMi);
        // raising the variate can only push LOS -> NLOS, never the reverse
        if (lo == LosState::Nlos)
            CHECK(hi == LosState::Nlos);
    }
}

TEST_CASE("out-of-extent positions propagate the sampling error")
{
    const CorrelatedGridMap m = constant_map(0.0);
    CHECK_THROWS_AS(assign_los_state(m, {0, 0}, {1e4, 0.0}, Scenario::UMi), OutOfExtentError);
}

TEST_CASE("binary state map contains only zeros and ones")
{
    const GridSpec spec = grid_from_extent({-60, -60}, 120, 120, 4.0);
    Pcg32 rng = make_stream(12, RngPurpose::LosMap);
    const CorrelatedGridMap gauss = build_correlated_map(spec, 50.0, rng);
    const LosStateMap state = make_los_state_map(gauss, {0, 0}, Scenario::UMi);
    CHECK(state.underlying.kind == FieldKind::Binary);
    bool has_los = false, has_nlos = false;
    for (double v : state.underlying.values)
    {
        CHECK((v == 0.0 || v == 1.0));
        has_los |= v == 1.0;
        has_nlos |= v == 0.0;
    }
    // cells near the BS are forced LOS; far corners are mostly NLOS
    CHECK(has_los);
    CHECK(has_nlos);
}
