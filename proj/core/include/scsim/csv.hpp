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

#ifndef SCSIM_CSV_HPP
#define SCSIM_CSV_HPP

#include <cstdint>
#include <string>

namespace scsim
{

// Fixed numeric formatting for all CSV output: 9 significant digits,
// shortest form ("%.9g"). Part of the byte-exact output contract.
std::string format_g9(double v);

// FNV-1a 64-bit digest of a byte string, hex encoded.
std::string fnv1a64_hex(const std::string& bytes);

} // namespace scsim

#endif
