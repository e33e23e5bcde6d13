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

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qising/dynamics.hpp"
#include "qising/oscillator.hpp"

namespace qising::cli {

/// Invalid configuration; `path` names the offending field, e.g. "dynamics.theta1".
class ConfigError : public std::runtime_error {
   public:
    ConfigError(std::string path, const std::string &msg);
    const std::string &path() const {
        return path_;
    }

   private:
    std::string path_;
};

/// Minimal cone plus the sign choice of the event 1/2(1 + sign * cone operator).
struct EventSelector {
    double x = 0;
    int t = 0;
    int sign = 1;
};

struct U0Section {
    std::vector<double> thetas{0, 0.4, 1.5707963267948966};
    std::vector<int> etas{1, -1};
    std::array<double, 4> lambdas{1, 1, 1.5, 0.5};
    bool strict = true;
    int parallel = 1;
};

struct SearchSection {
    int restarts = 20;
    int iterations = 4000;
    /// "wpast" (the weak-past localization region) or "first_guess" (O_a v O_b - (t, 0)).
    std::string target = "wpast";
};

struct OscillatorSection {
    FockTruncation trunc;
    double t_min = 0;
    double t_max = 6.283185307179586;
    int points = 100;
};

struct RegionsSection {
    EventSelector a{0, 0, 1};
    EventSelector b{1, 0, 1};
    std::string format = "text";
    int t_min = -3;
    int t_max = 1;
    double x_min = -3;
    double x_max = 4;
};

struct VerifySection {
    /// Window for the Haag duality checks; kept small, the checks scale with 4^sites.
    int haag_x_min = -1;
    int haag_x_max = 2;
};

struct RunConfig {
    std::uint64_t seed = 1;
    double tol = 1e-8;
    ChainConfig window{-2, 2, 0, 12};
    DynamicsParams dynamics;
    EventSelector event_a{-0.5, 1, 1};
    EventSelector event_b{0.5, 1, 1};
    std::array<double, 4> lambdas{1.5, 1.5, 0.5, 0.5};
    /// Row-major [re, im] JSON file; overrides lambdas when set.
    std::optional<std::string> density_matrix;
    U0Section u0;
    SearchSection search;
    OscillatorSection oscillator;
    RegionsSection regions;
    VerifySection verify;
};

/// Reads a TOML or JSON file. A JSON report with a top-level "config" object is read as
/// that config.
RunConfig load_config(const std::string &path);
RunConfig config_from_json(const nlohmann::json &j);
nlohmann::json config_to_json(const RunConfig &cfg);
/// Parses TOML text into the JSON document model.
nlohmann::json toml_to_json(const std::string &text, const std::string &source = "config");
/// Range and consistency checks that need no heavy computation.
void validate_config(const RunConfig &cfg);

}  // namespace qising::cli
