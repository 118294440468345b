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

#ifndef SCSIM_RUNNER_HPP
#define SCSIM_RUNNER_HPP

#include <string>
#include <vector>

#include "scsim/channel.hpp"
#include "scsim/config.hpp"
#include "scsim/evolution.hpp"

namespace scsim
{

struct OutputRecord
{
    std::string file;
    std::string digest; // fnv1a64 of the file bytes
    std::uint64_t rows = 0;
};

// Reproducibility record of one run: the resolved config, seed, version,
// wall time, per-step warning counters and output digests.
struct RunManifest
{
    SimulationConfig config;
    std::uint64_t seed = 0;
    std::string version;
    std::string started_utc;
    std::string finished_utc;
    StepCounters counters;
    std::vector<OutputRecord> outputs;

    std::string to_json() const;
};

struct RunResult
{
    std::vector<ChannelSnapshot> snapshots;
    RunManifest manifest;
    SimMaps maps;
};

// Executes the full generation procedure: validate, build the trajectory and
// the correlated fields, assign the start condition, generate the anchor
// drop, then advance step by step over the remaining trajectory points.
RunResult run_simulation(const SimulationConfig& config);

// Writes cir.csv, summary.csv, angles.csv, delays.csv, optional field CSVs
// and manifest.json into out_dir (created if missing). Fills the manifest's
// output records. Returns the list of files written.
std::vector<std::string> write_outputs(const std::vector<ChannelSnapshot>& snapshots,
                                       RunManifest& manifest, const std::string& out_dir,
                                       const SimMaps* maps = nullptr);

} // namespace scsim

#endif
