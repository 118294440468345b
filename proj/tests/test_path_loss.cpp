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

#include "scsim/path_loss.hpp"

using namespace scsim;

TEST_CASE("close-in reference at 73 GHz is 69.71 dB")
{
    // 20*log10(4*pi*73e9 / 299792458)
    CHECK(fspl_1m_db(73e9) == doctest::Approx(69.7145).epsilon(1e-4));
}

TEST_CASE("at the 1 m reference with zero shadow fading PL equals the FSPL term")
{
    const double pl = path_loss_db(73e9, 1.0, LosState::Los, 0.0, 2.0, 3.2);
    CHECK(pl == doctest::Approx(fspl_1m_db(73e9)).epsilon(1e-12));
}

TEST_CASE("73 GHz, 50 m NLOS with exponent 3.2 gives about 124.08 dB")
{
    const double pl = path_loss_db(73e9, 50.0, LosState::Nlos, 0.0, 2.0, 3.2);
    CHECK(pl == doctest::Approx(124.081).epsilon(1e-4));
}

TEST_CASE("shadow fading adds linearly")
{
    const double base = path_loss_db(28e9, 100.0, LosState::Los, 0.0, 2.0, 3.2);
    CHECK(path_loss_db(28e9, 100.0, LosState::Los, 5.5, 2.0, 3.2) ==
          doctest::Approx(base + 5.5).epsilon(1e-12));
    CHECK(path_loss_db(28e9, 100.0, LosState::Los, -3.25, 2.0, 3.2) ==
          doctest::Approx(base - 3.25).epsilon(1e-12));
}

TEST_CASE("the exponent follows the propagation condition")
{
    const double los = path_loss_db(73e9, 100.0, LosState::Los, 0.0, 2.0, 3.2);
    const double nlos = path_loss_db(73e9, 100.0, LosState::Nlos, 0.0, 2.0, 3.2);
    CHECK(nlos - los == doctest::Approx(10.0 * (3.2 - 2.0) * 2.0).epsilon(1e-9)); // log10(100)=2
}

TEST_CASE("distances below the close-in reference are rejected")
{
    CHECK_THROWS_AS(path_loss_db(73e9, 0.5, LosState::Los, 0.0, 2.0, 3.2),
                    DistanceBelowReferenceError);
    CHECK_NOTHROW(path_loss_db(73e9, 1.0, LosState::Los, 0.0, 2.0, 3.2));
}
