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

#ifndef SCSIM_ERRORS_HPP
#define SCSIM_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace scsim
{

// A position outside the extent of a grid map.
class OutOfExtentError : public std::out_of_range
{
public:
    explicit OutOfExtentError(const std::string& what) : std::out_of_range(what) {}
};

// A grid too small to carry a field (fewer than 2 points per axis).
class ExtentTooSmallError : public std::invalid_argument
{
public:
    explicit ExtentTooSmallError(const std::string& what) : std::invalid_argument(what) {}
};

// 3-D link distance below the 1 m close-in reference.
class DistanceBelowReferenceError : public std::domain_error
{
public:
    explicit DistanceBelowReferenceError(const std::string& what) : std::domain_error(what) {}
};

class NonPositiveTotalPowerError : public std::domain_error
{
public:
    explicit NonPositiveTotalPowerError(const std::string& what) : std::domain_error(what) {}
};

class DegenerateGeometryError : public std::domain_error
{
public:
    explicit DegenerateGeometryError(const std::string& what) : std::domain_error(what) {}
};

// One violated configuration constraint.
struct ConfigViolation
{
    std::string field;
    std::string reason;
};

// Aggregates every violated constraint of a configuration.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string what, std::vector<ConfigViolation> violations)
        : std::runtime_error(std::move(what)), violations_(std::move(violations))
    {
    }

    const std::vector<ConfigViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<ConfigViolation> violations_;
};

} // namespace scsim

#endif
