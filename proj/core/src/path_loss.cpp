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

#include "scsim/path_loss.hpp"

#include <cmath>
#include <sstream>

#include "scsim/errors.hpp"
#include "scsim/geometry.hpp"

namespace scsim
{

double fspl_1m_db(double frequency_hz)
{
    return 20.0 * std::log10(4.0 * kPi * frequency_hz / kSpeedOfLight);
}

double path_loss_db(double frequency_hz, double d_3d_m, LosState state, double sf_db,
                    double exponent_los, double exponent_nlos)
{
    if (d_3d_m < 1.0)
    {
        std::ostringstream os;
        os << "3-D distance " << d_3d_m << " m below the 1 m close-in reference";
        throw DistanceBelowReferenceError(os.str());
    }
    const double n = (state == LosState::Los) ? exponent_los : exponent_nlos;
    return fspl_1m_db(frequency_hz) + 10.0 * n * std::log10(d_3d_m) + sf_db;
}

} // namespace scsim
