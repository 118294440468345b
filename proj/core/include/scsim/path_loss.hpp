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

#ifndef SCSIM_PATH_LOSS_HPP
#define SCSIM_PATH_LOSS_HPP

#include "scsim/los.hpp"

namespace scsim
{

// Free-space path loss at the 1 m close-in reference distance:
// 20*log10(4*pi*f/c) dB.
double fspl_1m_db(double frequency_hz);

// Close-in reference path-loss model:
//   PL = FSPL(1 m, f) + 10*n*log10(d_3d) + sf_db
// with the exponent n selected by the LOS state. Throws
// DistanceBelowReferenceError for d_3d < 1 m.
double path_loss_db(double frequency_hz, double d_3d_m, LosState state, double sf_db,
                    double exponent_los, double exponent_nlos);

} // namespace scsim

#endif
