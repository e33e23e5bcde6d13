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

#include "qising_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include <spdlog/spdlog.h>

#include "qising/commoncause.hpp"
#include "qising/error.hpp"
#include "qising/json.hpp"

namespace qising::cli {

using nlohmann::json;

namespace {

MinimalCone cone_of(const EventSelector &e) {
    return {HalfIndex::from_double(e.x), e.t};
}

CMat event_projection(const Automorphism &dyn, const EventSelector &e) {
    CMat one = identity(dyn.net().dim());
    return 0.5 * (one + e.sign * dyn.cone_operator(cone_of(e)));
}

State make_state(const RunConfig &cfg, const CMat &a, const CMat &b) {
    if (!cfg.density_matrix) {
        return build_corr_state(a, b, cfg.lambdas);
    }
    std::ifstream in(*cfg.density_matrix);
    if (!in) {
        fail(Errc::InvalidArgument, "cannot open density matrix file " + *cfg.density_matrix);
    }
    CMat rho = cmat_from_json(json::parse(in));
    if (rho.rows() != a.rows()) {
        fail(Errc::ShapeMismatch, "density matrix has dimension " + std::to_string(rho.rows()) + ", window needs " +
                                      std::to_string(a.rows()));
    }
    return State(std::move(rho));
}

struct Scenario {
    std::shared_ptr<const IsingNet> net;
    std::unique_ptr<Automorphism> dyn;
    Region o_a;
    Region o_b;
    CMat a;
    CMat b;
};

Scenario scenario(const RunConfig &cfg) {
    auto net = std::make_shared<const IsingNet>(cfg.window);
    auto dyn = std::make_unique<Automorphism>(net, cfg.dynamics);
    Region o_a = Region::cone(cone_of(cfg.event_a));
    Region o_b = Region::cone(cone_of(cfg.event_b));
    CMat a = event_projection(*dyn, cfg.event_a);
    CMat b = event_projection(*dyn, cfg.event_b);
    return {net, std::move(dyn), o_a, o_b, a, b};
}

std::string algebra_type(int n) {
    if (n % 2 == 0) {
        return "M_" + std::to_string(1 << (n / 2));
    }
    std::string m = "M_" + std::to_string(1 << ((n - 1) / 2));
    return m + " + " + m;
}

json dimension_table(const Automorphism &dyn, bool &pass) {
    const std::array<Region::Bounds, 6> rows{{
        {0, 0, 0, 0},
        {-1, 0, 0, 0},
        {-1, 0, -1, 0},
        {-1, 1, -1, 0},
        {-1, 1, -1, 1},
        {-1, 1, -2, 1},
    }};
    json out = json::array();
    for (const auto &r : rows) {
        Region o = Region::rect(r.u1, r.u2, r.v1, r.v2);
        json row{{"region", o}, {"n", o.n()}, {"type", algebra_type(o.n())}};
        try {
            LocalAlgebra alg = cone_algebra(o, dyn);
            std::vector<CMat> gens;
            for (const auto &c : o.minimals()) {
                gens.push_back(dyn.cone_operator(c));
            }
            std::size_t z = center(alg.basis, gens).size();
            bool ok = alg.lin_dim == (1 << o.n()) && z == (o.n() % 2 == 0 ? 1u : 2u);
            row["lin_dim"] = alg.lin_dim;
            row["center_dim"] = z;
            row["pass"] = ok;
            pass = pass && ok;
        } catch (const Error &e) {
            row["pass"] = false;
            row["error"] = e.what();
            pass = false;
        }
        out.push_back(row);
    }
    return out;
}

json monom_independence(const IsingNet &net, bool &pass) {
    int intervals = 0;
    int bad = 0;
    std::vector<HalfIndex> idx = net.generator_indices();
    for (std::size_t i = 0; i < idx.size(); i++) {
        for (std::size_t j = i; j < idx.size() && j - i < 10; j++) {
            Interval iv{idx[i], idx[j]};
            std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << iv.size()); s++) {
                PauliString p = net.monom_symbol(iv, s);
                seen.emplace(p.x, p.z);
            }
            // distinct Pauli patterns are trace orthogonal, so the Gram matrix is exactly 1
            intervals++;
            if (seen.size() != (std::size_t{1} << iv.size())) {
                bad++;
            }
        }
    }
    pass = pass && bad == 0;
    return {{"intervals", intervals}, {"failures", bad}};
}

json haag_table(const RunConfig &cfg, bool &pass) {
    IsingNet net(ChainConfig{cfg.verify.haag_x_min, cfg.verify.haag_x_max, 0, 12});
    Interval w = net.window();
    json out = json::array();
    for (int lo = w.lo.twice() + 1; lo <= w.hi.twice() - 1; lo++) {
        for (int hi = lo; hi <= w.hi.twice() - 1; hi++) {
            Interval iv{HalfIndex::from_twice(lo), HalfIndex::from_twice(hi)};
            HaagReport r = haag_duality_check(net, iv);
            out.push_back({{"interval", {iv.lo.value(), iv.hi.value()}},
                           {"expected_dim", r.expected.size()},
                           {"computed_dim", r.computed_commutant_dim},
                           {"distance", r.distance},
                           {"match", r.match}});
            pass = pass && r.match;
        }
    }
    return out;
}

json region_cones(const Viewport &view, const ConePredicate &pred) {
    json out = json::array();
    for (int t = view.t_min; t <= view.t_max; t++) {
        for (int tx = view.x_min.twice(); tx <= view.x_max.twice(); tx++) {
            MinimalCone c{HalfIndex::from_twice(tx), t};
            if (pred(c)) {
                out.push_back(c);
            }
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string> &command_names() {
    static const std::vector<std::string> names{"verify-net", "find-cc", "u0-sweep", "search-commuting",
                                                "oscillator", "regions"};
    return names;
}

CommandResult verify_net(const RunConfig &cfg) {
    CommandResult res;
    auto net = std::make_shared<const IsingNet>(cfg.window);
    Automorphism dyn(net, cfg.dynamics);
    bool pass = true;

    RelationReport rel = relation_check(*net);
    pass = pass && rel.pass();
    res.report["relations"] = {{"pairs", rel.pairs}, {"violations", rel.violations}};
    spdlog::debug("relations: {} pairs, {} violations", rel.pairs, rel.violations);

    res.report["monoms"] = monom_independence(*net, pass);
    res.report["dimension_law"] = dimension_table(dyn, pass);
    spdlog::debug("dimension law done");
    res.report["haag_duality"] = haag_table(cfg, pass);
    spdlog::debug("haag duality done");

    CausalityReport caus = local_primitive_causality_check(dyn);
    json entries = json::array();
    for (const auto &e : caus.entries) {
        entries.push_back({{"v", e.v}, {"completion", e.completion}, {"residual", e.residual}});
    }
    bool caus_ok = !caus.entries.empty() && caus.max_residual < 1e-9;
    pass = pass && caus_ok;
    res.report["causality"] = {{"entries", entries}, {"max_residual", caus.max_residual}, {"pass", caus_ok}};
    res.report["pass"] = pass;
    res.exit_code = pass ? kPass : kFail;
    return res;
}

CommandResult find_cc(const RunConfig &cfg) {
    CommandResult res;
    Scenario s = scenario(cfg);
    State phi = make_state(cfg, s.a, s.b);
    Lemma1Options opt;
    opt.tol = cfg.tol;
    Prop2Result r = prop2_pipeline(s.o_a, s.o_b, s.a, s.b, *s.dyn, phi, opt);
    const CommonCauseCertificate &c = r.certificate;
    bool in_wpast = r.regions.localization.within(wpast(s.o_a, s.o_b));
    bool pass = c.screening.max_residual < cfg.tol && c.localization_residual < 1e-9 && c.nontrivial && in_wpast &&
                c.subprojection_defect < 1e-10;
    res.report["events"] = {{"a", s.o_a}, {"b", s.o_b}};
    if (cfg.density_matrix) {
        res.report["density_matrix"] = *cfg.density_matrix;
    } else {
        res.report["lambdas"] = cfg.lambdas;
    }
    res.report["dynamics"] = cfg.dynamics;
    res.report["certificate"] = c;
    res.report["c"] = cmat_to_json(c.c);
    res.report["regions"] = {{"a_left", r.regions.a_left},
                             {"b_right", r.regions.b_right},
                             {"joined", r.regions.joined},
                             {"extended", r.regions.extended},
                             {"localization", r.regions.localization}};
    res.report["causality_residual"] = r.causality_residual;
    res.report["center_dim"] = r.n_center_dim;
    res.report["localized_in_wpast"] = in_wpast;
    res.report["pass"] = pass;
    res.exit_code = pass ? kPass : kFail;
    return res;
}

CommandResult u0_sweep(const RunConfig &cfg) {
    CommandResult res;
    U0Options opt{cfg.u0.strict, cfg.u0.parallel};
    U0Report r = u0_universal_check(dynamics_grid(cfg.u0.thetas, cfg.u0.etas), cfg.u0.lambdas, opt);
    res.report = r;
    bool pass = !r.preconditions_met || r.max_residual < cfg.tol;
    res.report["asserted"] = r.preconditions_met;
    res.report["pass"] = pass;
    res.exit_code = pass ? kPass : kFail;
    return res;
}

CommandResult search_commuting(const RunConfig &cfg) {
    CommandResult res;
    Scenario s = scenario(cfg);
    State phi = make_state(cfg, s.a, s.b);
    std::optional<Region> target;
    if (cfg.search.target == "wpast") {
        bool left = s.o_a.within(wedges_and_bounds(s.o_b).w_left);
        target = left ? prop2_regions(s.o_a, s.o_b, *s.dyn).localization
                      : prop2_regions(s.o_b, s.o_a, *s.dyn).localization;
    } else {
        target = join(s.o_a, s.o_b).translated(-first_guess_shift(s.o_a, s.o_b));
    }
    LocalAlgebra alg = cone_algebra(*target, *s.dyn);
    SearchOptions opt{cfg.search.restarts, cfg.search.iterations, cfg.seed};
    SearchReport r = commuting_cc_search(phi, s.a, s.b, alg.basis, opt);
    res.report = r;
    res.report["target_region"] = *target;
    res.report["target_lin_dim"] = alg.lin_dim;
    res.report["correlation"] = correlation(phi, s.a, s.b);
    res.exit_code = kPass;
    return res;
}

CommandResult oscillator(const RunConfig &cfg) {
    CommandResult res;
    const OscillatorSection &o = cfg.oscillator;
    std::ostringstream csv;
    csv.precision(17);
    csv << "t,coef_re,coef_im,expected_im,psi2_re,psi2_im,psi2_printed_re,psi2_printed_im\n";
    double worst = 0;
    double worst_psi2 = 0;
    for (int k = 0; k < o.points; k++) {
        double t = o.t_min + (o.t_max - o.t_min) * k / (o.points - 1);
        cplx c = commutator_groundstate(o.trunc, t);
        cplx p = psi2_coefficient(o.trunc, t);
        cplx q = psi2_printed_formula(o.trunc, t);
        double expected = -std::sin(o.trunc.hbar * o.trunc.omega * t);
        worst = std::max(worst, std::abs(c - cplx(0, expected)));
        worst_psi2 = std::max(worst_psi2, std::abs(p - q));
        csv << t << ',' << c.real() << ',' << c.imag() << ',' << expected << ',' << p.real() << ',' << p.imag() << ','
            << q.real() << ',' << q.imag() << '\n';
    }
    bool pass = worst < 1e-10;
    res.text = csv.str();
    res.report = {{"points", o.points},
                  {"n_levels", o.trunc.n_levels},
                  {"max_deviation", worst},
                  {"max_psi2_vs_printed", worst_psi2},
                  {"pass", pass}};
    res.exit_code = pass ? kPass : kFail;
    return res;
}

CommandResult regions(const RunConfig &cfg) {
    CommandResult res;
    const RegionsSection &r = cfg.regions;
    Region a = Region::cone(cone_of(r.a));
    Region b = Region::cone(cone_of(r.b));
    Viewport view{HalfIndex::from_double(r.x_min), HalfIndex::from_double(r.x_max), r.t_min, r.t_max};
    bool sep = spacelike_separated(a, b);
    res.report["a"] = a;
    res.report["b"] = b;
    res.report["spacelike"] = sep;
    res.report["join"] = join(a, b);
    ConePredicate wp = wpast(a, b);
    ConePredicate cp = cpast(a, b);
    ConePredicate sp = spast(a, b);
    json cp_cones = region_cones(view, cp);
    res.report["wpast"] = region_cones(view, wp);
    res.report["cpast"] = cp_cones;
    res.report["spast"] = region_cones(view, sp);
    std::vector<Layer> layers{{'A', "O_a", "#d62728", [a](const MinimalCone &c) { return a.contains(c); }},
                              {'B', "O_b", "#1f77b4", [b](const MinimalCone &c) { return b.contains(c); }}};
    if (sep) {
        int t = first_guess_shift(a, b);
        Region guess = join(a, b).translated(-t);
        res.report["first_guess_shift"] = t;
        res.report["first_guess"] = guess;
        layers.push_back({'F', "first guess O_a v O_b - (t,0)", "#ff7f0e",
                          [guess](const MinimalCone &c) { return guess.contains(c); }});
    }
    layers.push_back({'s', "spast", "#2ca02c", sp});
    layers.push_back({'c', "cpast", "#98df8a", cp});
    layers.push_back({'w', "wpast", "#dddddd", wp});
    res.text = r.format == "svg" ? render_svg(layers, view) : render_text(layers, view);
    bool pass = sep && !cp_cones.empty();
    res.report["pass"] = pass;
    res.exit_code = pass ? kPass : kFail;
    return res;
}

CommandResult run_command(const std::string &name, const RunConfig &cfg) {
    CommandResult res;
    try {
        validate_config(cfg);
        if (name == "verify-net") {
            res = verify_net(cfg);
        } else if (name == "find-cc") {
            res = find_cc(cfg);
        } else if (name == "u0-sweep") {
            res = u0_sweep(cfg);
        } else if (name == "search-commuting") {
            res = search_commuting(cfg);
        } else if (name == "oscillator") {
            res = oscillator(cfg);
        } else if (name == "regions") {
            res = regions(cfg);
        } else {
            throw ConfigError("command", "unknown command " + name);
        }
    } catch (const ConfigError &e) {
        res = {};
        res.exit_code = kUsage;
        res.report["error"] = {{"path", e.path()}, {"message", e.what()}};
    } catch (const Error &e) {
        res = {};
        res.exit_code = kFail;
        res.report["error"] = {{"code", std::string(errc_name(e.code()))}, {"message", e.what()}};
    }
    res.report["command"] = name;
    res.report["seed"] = cfg.seed;
    res.report["config"] = config_to_json(cfg);
    return res;
}

}  // namespace qising::cli
