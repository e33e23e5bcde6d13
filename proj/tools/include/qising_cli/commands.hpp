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

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qising_cli/config.hpp"

namespace qising::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

struct CommandResult {
    int exit_code = kPass;
    nlohmann::json report;
    /// CSV, SVG or a text diagram; empty when the report is the only output.
    std::string text;
};

const std::vector<std::string> &command_names();

CommandResult verify_net(const RunConfig &cfg);
CommandResult find_cc(const RunConfig &cfg);
CommandResult u0_sweep(const RunConfig &cfg);
CommandResult search_commuting(const RunConfig &cfg);
CommandResult oscillator(const RunConfig &cfg);
CommandResult regions(const RunConfig &cfg);

/// Validates `cfg`, runs the named command and maps failures to exit codes: 2 for
/// configuration errors, 1 for errors raised by the computation.
CommandResult run_command(const std::string &name, const RunConfig &cfg);

}  // namespace qising::cli
