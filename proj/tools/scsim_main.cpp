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

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "scsim/runner.hpp"
#include "scsim/version.hpp"

namespace
{

struct CommonArgs
{
    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> overrides;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool quiet = false;
    bool verbose = false;
};

scsim::SimulationConfig resolve_config(const CommonArgs& args)
{
    scsim::SimulationConfig config = scsim::load_config_file(args.config_path);
    for (const auto& ov : args.overrides)
        scsim::apply_override(config, ov);
    if (args.seed_given)
    {
        config.rng_seed = args.seed;
        config.rng_seed_set = true;
    }
    scsim::require_valid(config);
    return config;
}

void add_common(CLI::App* cmd, CommonArgs& args)
{
    cmd->add_option("--config", args.config_path, "configuration file")->required();
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--seed", args.seed, "RNG seed (overrides the config file)")
        ->each([&args](const std::string&) { args.seed_given = true; });
    cmd->add_option("--override", args.overrides,
                    "config override, section.key=value (repeatable)");
    cmd->add_flag("--quiet", args.quiet, "suppress the run summary");
    cmd->add_flag("--verbose", args.verbose, "progress logging to stderr");
}

int run_one(scsim::SimulationConfig config, const std::string& out_dir, bool quiet, bool verbose)
{
    if (verbose)
        std::cerr << "simulating seed " << config.rng_seed << " -> " << out_dir << "\n";
    scsim::RunResult result = scsim::run_simulation(config);
    const auto files =
        scsim::write_outputs(result.snapshots, result.manifest, out_dir, &result.maps);
    if (!quiet)
    {
        std::cout << "seed " << config.rng_seed << ": " << result.snapshots.size()
                  << " snapshots, " << files.size() << " files in " << out_dir;
        const auto& c = result.manifest.counters;
        if (c.delay_clamps || c.los_transitions)
            std::cout << " (delay clamps " << c.delay_clamps << ", LOS transitions "
                      << c.los_transitions << ")";
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"spatially consistent statistical mmWave channel simulator"};
    app.set_version_flag("--version", scsim::kVersion);
    app.require_subcommand(1);

    CommonArgs sim_args;
    int runs = 1;
    bool write_maps = false;
    CLI::App* sim = app.add_subcommand("simulate", "run the generation procedure over a track");
    add_common(sim, sim_args);
    sim->add_option("--runs", runs, "number of independent runs (seed, seed+1, ...)")
        ->check(CLI::PositiveNumber);
    sim->add_flag("--write-maps", write_maps, "also export the correlated field CSVs");

    CommonArgs map_args;
    CLI::App* maps = app.add_subcommand("make-maps", "export correlated field maps only");
    add_common(maps, map_args);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (sim->parsed())
        {
            scsim::SimulationConfig config = resolve_config(sim_args);
            if (write_maps)
                config.write_maps = true;
            if (runs == 1)
                return run_one(config, sim_args.out_dir, sim_args.quiet, sim_args.verbose);

            // Independent seeds, fully isolated state per run.
            std::vector<std::future<int>> futures;
            for (int r = 0; r < runs; ++r)
            {
                scsim::SimulationConfig run_config = config;
                run_config.rng_seed = config.rng_seed + static_cast<std::uint64_t>(r);
                char sub[32];
                std::snprintf(sub, sizeof(sub), "run_%03d", r);
                const std::string dir =
                    (std::filesystem::path(sim_args.out_dir) / sub).string();
                futures.push_back(std::async(std::launch::async, run_one, run_config, dir,
                                             sim_args.quiet, sim_args.verbose));
            }
            int rc = 0;
            for (auto& f : futures)
                rc |= f.get();
            return rc;
        }

        if (maps->parsed())
        {
            scsim::SimulationConfig config = resolve_config(map_args);
            config.write_maps = true;
            if (map_args.verbose)
                std::cerr << "building correlated fields, seed " << config.rng_seed << "\n";
            scsim::RunResult result = scsim::run_simulation(config);
            namespace fs = std::filesystem;
            fs::create_directories(map_args.out_dir);
            auto emit = [&](const std::string& name, const std::string& bytes)
            {
                std::ofstream out(fs::path(map_args.out_dir) / name, std::ios::binary);
                out << bytes;
                if (!map_args.quiet)
                    std::cout << name << "\n";
            };
            emit("los_field.csv", scsim::map_to_csv(result.maps.los_field));
            const scsim::LosStateMap state_map = scsim::make_los_state_map(
                result.maps.los_field, config.bs_position(), config.scenario);
            emit("los_state.csv", scsim::map_to_csv(state_map.underlying));
            for (std::size_t n = 0; n < result.maps.sf.cluster_shadow.size(); ++n)
            {
                emit("sf_z_cluster" + std::to_string(n) + ".csv",
                     scsim::map_to_csv(result.maps.sf.cluster_shadow[n]));
                emit("sf_u_cluster" + std::to_string(n) + ".csv",
                     scsim::map_to_csv(result.maps.sf.subpath_shadow[n]));
            }
            return 0;
        }
    }
    catch (const scsim::ConfigError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
