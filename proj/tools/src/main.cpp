// Copyright 2026 The qising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "qising_cli/commands.hpp"

namespace {

void setup_logging() {
    auto logger = spdlog::stderr_color_mt("qising");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char *level = std::getenv("QISING_LOG")) {
        spdlog::set_level(spdlog::level::from_str(level));
    }
}

}  // namespace

int main(int argc, char **argv) {
    using namespace qising::cli;
    setup_logging();

    CLI::App app{"Common-cause experiments on the local quantum Ising net"};
    std::string config_path;
    std::string json_path;
    std::uint64_t seed = 0;
    double tol = 0;
    int parallel = 0;
    app.add_option("--config", config_path, "TOML or JSON config (a JSON report is accepted too)");
    auto *seed_opt = app.add_option("--seed", seed, "RNG seed");
    auto *tol_opt = app.add_option("--tol", tol, "screening tolerance");
    app.add_option("--json", json_path, "write the JSON report here");
    auto *par_opt = app.add_option("--parallel", parallel, "workers for grid sweeps");
    app.require_subcommand(1);
    const std::map<std::string, std::string> about{
        {"verify-net", "generator relations, dimension law, causality and Haag checks"},
        {"find-cc", "common cause for two correlated events in the weak past"},
        {"u0-sweep", "U0 common cause over a grid of dynamics"},
        {"search-commuting", "simplex search for a commuting common cause"},
        {"oscillator", "ground-state commutator of the truncated oscillator"},
        {"regions", "draw the regions of the common-cause construction"},
    };
    for (const auto &name : command_names()) {
        app.add_subcommand(name, about.at(name))->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }
    std::string command = app.get_subcommands().front()->get_name();

    RunConfig cfg;
    try {
        if (!config_path.empty()) {
            cfg = load_config(config_path);
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    }
    if (*seed_opt) {
        cfg.seed = seed;
    }
    if (*tol_opt) {
        cfg.tol = tol;
    }
    if (*par_opt) {
        cfg.u0.parallel = parallel;
    }

    spdlog::info("running {} (seed {})", command, cfg.seed);
    CommandResult res = run_command(command, cfg);
    std::string dump = res.report.dump(2);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << '\n';
            return kUsage;
        }
        out << dump << '\n';
    }
    if (res.report.contains("error")) {
        std::cerr << res.report["error"].dump() << '\n';
    }
    if (!res.text.empty()) {
        std::cout << res.text;
    } else {
        std::cout << dump << '\n';
    }
    return res.exit_code;
}
