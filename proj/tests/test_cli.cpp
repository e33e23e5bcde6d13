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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>

#include "qising/commoncause.hpp"
#include "qising/json.hpp"
#include "qising_cli/commands.hpp"
#include "qising_cli/config.hpp"

namespace {

using namespace qising::cli;
using nlohmann::json;

std::filesystem::path write_temp(const std::string &name, const std::string &text) {
    auto dir = std::filesystem::temp_directory_path() / "qising_test_cli";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path;
}

std::string config_error_path(const std::function<void()> &f) {
    try {
        f();
    } catch (const ConfigError &e) {
        return e.path();
    }
    return "<none>";
}

TEST(Config, TomlRoundTrip) {
    auto path = write_temp("a.toml", R"(
seed = 9
tol = 1e-9

[window]
x_min = -3
x_max = 3

[dynamics]
theta1 = 0.25
theta2 = -0.5
eta1 = -1
eta2 = 1

[events.a]
x = -0.5
t = 1
sign = -1

[state]
lambdas = [1.2, 0.8, 1.3, 0.7]

[u0]
thetas = [0.1, 0.2]
etas = [1]
)");
    RunConfig cfg = load_config(path.string());
    EXPECT_EQ(cfg.seed, 9u);
    EXPECT_DOUBLE_EQ(cfg.tol, 1e-9);
    EXPECT_EQ(cfg.window.x_min, -3);
    EXPECT_DOUBLE_EQ(cfg.dynamics.theta2, -0.5);
    EXPECT_EQ(cfg.dynamics.eta1, -1);
    EXPECT_EQ(cfg.event_a.sign, -1);
    EXPECT_DOUBLE_EQ(cfg.event_b.x, 0.5);
    EXPECT_DOUBLE_EQ(cfg.lambdas[2], 1.3);
    EXPECT_EQ(cfg.u0.thetas.size(), 2u);
    EXPECT_NO_THROW(validate_config(cfg));
    RunConfig back = config_from_json(config_to_json(cfg));
    EXPECT_EQ(config_to_json(back), config_to_json(cfg));
}

TEST(Config, JsonMatchesToml) {
    auto toml = write_temp("b.toml", "[dynamics]\ntheta1 = 0.3\n[search]\nrestarts = 4\n");
    auto js = write_temp("b.json", R"({"dynamics": {"theta1": 0.3}, "search": {"restarts": 4}})");
    EXPECT_EQ(config_to_json(load_config(toml.string())), config_to_json(load_config(js.string())));
}

TEST(Config, FieldPathErrors) {
    EXPECT_EQ(config_error_path([] { config_from_json(json::parse(R"({"dynamics": {"theta1": "x"}})")); }),
              "dynamics.theta1");
    EXPECT_EQ(config_error_path([] { config_from_json(json::parse(R"({"dynamics": {"thetaa": 1}})")); }),
              "dynamics.thetaa");
    EXPECT_EQ(config_error_path([] { config_from_json(json::parse(R"({"bogus": 1})")); }), "bogus");
    EXPECT_EQ(config_error_path([] { config_from_json(json::parse(R"({"state": {"lambdas": [1, 2]}})")); }),
              "state.lambdas");
    EXPECT_EQ(config_error_path([] { load_config("/nonexistent/q.toml"); }), "/nonexistent/q.toml");
    auto bad = write_temp("bad.toml", "[window\nx_min = 1\n");
    EXPECT_NE(config_error_path([&] { load_config(bad.string()); }), "<none>");
}

TEST(Config, Validation) {
    RunConfig cfg;
    cfg.dynamics.eta2 = 3;
    EXPECT_EQ(config_error_path([&] { validate_config(cfg); }), "dynamics");
    cfg = RunConfig{};
    cfg.event_a.x = 0.3;
    EXPECT_EQ(config_error_path([&] { validate_config(cfg); }), "events.a.x");
    cfg = RunConfig{};
    cfg.lambdas = {1, 1, 1, 0.5};
    EXPECT_EQ(config_error_path([&] { validate_config(cfg); }), "state.lambdas");
    cfg = RunConfig{};
    cfg.u0.lambdas = {1.6, 1.4, 0.5, 0.5};
    EXPECT_EQ(config_error_path([&] { validate_config(cfg); }), "u0.lambdas");
    cfg.u0.strict = false;
    EXPECT_NO_THROW(validate_config(cfg));
    cfg = RunConfig{};
    cfg.search.target = "everywhere";
    EXPECT_EQ(config_error_path([&] { validate_config(cfg); }), "search.target");
    cfg = RunConfig{};
    cfg.oscillator.trunc.n_levels = 2;
    EXPECT_EQ(config_error_path([&] { validate_config(cfg); }), "oscillator");
}

TEST(RunCommand, PaddingLeavingNoInteriorIsUsageError) {
    RunConfig cfg;
    cfg.window = {0, 2, 2, 12};
    CommandResult r = run_command("verify-net", cfg);
    EXPECT_EQ(r.exit_code, kUsage);
    EXPECT_EQ(r.report["error"]["path"], "window");
    EXPECT_NE(r.report["error"]["message"].get<std::string>().find("OutOfWindow"), std::string::npos);
}

TEST(RunCommand, UnknownCommand) {
    CommandResult r = run_command("frobnicate", RunConfig{});
    EXPECT_EQ(r.exit_code, kUsage);
}

TEST(RunCommand, UncorrelatedStateFails) {
    RunConfig cfg;
    cfg.lambdas = {1, 1, 1, 1};
    CommandResult r = run_command("find-cc", cfg);
    EXPECT_EQ(r.exit_code, kFail);
    EXPECT_EQ(r.report["error"]["code"], "NotCorrelated");
    EXPECT_EQ(r.report["command"], "find-cc");
}

TEST(FindCc, ReportRoundTrip) {
    RunConfig cfg;
    cfg.lambdas = {1.2, 0.8, 1.3, 0.7};
    cfg.dynamics = {0.3, -0.8, 1, -1};
    CommandResult r = run_command("find-cc", cfg);
    ASSERT_EQ(r.exit_code, kPass) << r.report.dump(2);
    EXPECT_TRUE(r.report["pass"].get<bool>());
    EXPECT_TRUE(r.report["localized_in_wpast"].get<bool>());
    auto path = write_temp("report.json", r.report.dump());
    RunConfig again = load_config(path.string());
    CommandResult r2 = run_command("find-cc", again);
    const json &s1 = r.report["certificate"]["screening"]["residuals"];
    const json &s2 = r2.report["certificate"]["screening"]["residuals"];
    ASSERT_EQ(s1.size(), s2.size());
    for (std::size_t k = 0; k < s1.size(); k++) {
        EXPECT_NEAR(s1[k].get<double>(), s2[k].get<double>(), 1e-12);
    }
    EXPECT_NEAR(r.report["certificate"]["t_prime"].get<double>(), r2.report["certificate"]["t_prime"].get<double>(),
                1e-12);
}

TEST(FindCc, DensityMatrixFile) {
    RunConfig cfg;
    cfg.lambdas = {1.2, 0.8, 1.3, 0.7};
    CommandResult base = run_command("find-cc", cfg);
    ASSERT_EQ(base.exit_code, kPass);
    auto net = std::make_shared<const qising::IsingNet>(cfg.window);
    qising::Automorphism dyn(net, cfg.dynamics);
    qising::AdjacentScenario s = qising::adjacent_scenario(dyn);
    qising::State phi = qising::build_corr_state(s.a, s.b, cfg.lambdas);
    RunConfig from_file = cfg;
    from_file.density_matrix = write_temp("rho.json", qising::cmat_to_json(phi.rho()).dump()).string();
    CommandResult r = run_command("find-cc", from_file);
    ASSERT_EQ(r.exit_code, kPass);
    EXPECT_NEAR(r.report["certificate"]["t_prime"].get<double>(), base.report["certificate"]["t_prime"].get<double>(),
                1e-12);
    RunConfig bad = cfg;
    bad.density_matrix = write_temp("tiny.json", "[[1,0]]").string();
    CommandResult e = run_command("find-cc", bad);
    EXPECT_EQ(e.exit_code, kFail);
    EXPECT_EQ(e.report["error"]["code"], "ShapeMismatch");
}

TEST(Oscillator, CsvRows) {
    RunConfig cfg;
    CommandResult r = run_command("oscillator", cfg);
    ASSERT_EQ(r.exit_code, kPass);
    std::istringstream in(r.text);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("t,coef_re,coef_im", 0), 0u);
    int rows = 0;
    while (std::getline(in, line)) {
        double t, re, im;
        char c;
        std::istringstream row(line);
        row >> t >> c >> re >> c >> im;
        EXPECT_NEAR(im, -std::sin(t), 1e-10);
        EXPECT_NEAR(re, 0, 1e-10);
        rows++;
    }
    EXPECT_EQ(rows, 100);
}

TEST(Regions, NeighbouringSites) {
    CommandResult r = run_command("regions", RunConfig{});
    ASSERT_EQ(r.exit_code, kPass);
    EXPECT_TRUE(r.report["spacelike"].get<bool>());
    EXPECT_FALSE(r.report["cpast"].empty());
    EXPECT_EQ(r.report["first_guess_shift"], 1);
    EXPECT_NE(r.text.find('A'), std::string::npos);
    RunConfig svg;
    svg.regions.format = "svg";
    EXPECT_EQ(run_command("regions", svg).text.rfind("<svg", 0), 0u);
}

TEST(U0Sweep, DefaultGrid) {
    CommandResult r = run_command("u0-sweep", RunConfig{});
    ASSERT_EQ(r.exit_code, kPass);
    EXPECT_EQ(r.report["entries"].size(), 36u);
    EXPECT_TRUE(r.report["asserted"].get<bool>());
    RunConfig generic;
    generic.u0.lambdas = {1.6, 1.4, 0.5, 0.5};
    generic.u0.strict = false;
    generic.u0.thetas = {0.4, 1.1};
    generic.u0.etas = {1};
    CommandResult g = run_command("u0-sweep", generic);
    EXPECT_EQ(g.exit_code, kPass);
    EXPECT_FALSE(g.report["asserted"].get<bool>());
    EXPECT_GT(g.report["max_residual"].get<double>(), 1e-4);
}

TEST(VerifyNet, DefaultWindow) {
    CommandResult r = run_command("verify-net", RunConfig{});
    EXPECT_EQ(r.exit_code, kPass) << r.report.dump(2);
    EXPECT_EQ(r.report["relations"]["violations"], 0);
    EXPECT_EQ(r.report["dimension_law"].size(), 6u);
}

TEST(SearchCommuting, NeverClaimsNonexistence) {
    RunConfig cfg;
    cfg.lambdas = {1.2, 0.8, 1.3, 0.7};
    cfg.search.restarts = 2;
    cfg.search.iterations = 300;
    CommandResult r = run_command("search-commuting", cfg);
    EXPECT_EQ(r.exit_code, kPass);
    EXPECT_FALSE(r.report["claims_nonexistence"].get<bool>());
    EXPECT_GT(r.report["commutant_dim"].get<int>(), 1);
}

}  // namespace
