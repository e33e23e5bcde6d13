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

#include "qising_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <toml++/toml.hpp>

#include "qising/error.hpp"

namespace qising::cli {

using nlohmann::json;

ConfigError::ConfigError(std::string path, const std::string &msg)
    : std::runtime_error(path + ": " + msg), path_(std::move(path)) {
}

namespace {

std::string join_path(const std::string &base, const std::string &key) {
    return base.empty() ? key : base + "." + key;
}

// Field access on one JSON object that remembers which keys were read.
class Section {
   public:
    Section(const json &j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) {
            throw ConfigError(path_.empty() ? "<root>" : path_, "expected a table");
        }
    }

    // Rejects keys that were never read.
    void done() const {
        for (const auto &[key, _] : j_.items()) {
            if (!used_.count(key)) {
                throw ConfigError(join_path(path_, key), "unknown field");
            }
        }
    }

    const json *find(const std::string &key) {
        used_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    std::string at(const std::string &key) const {
        return join_path(path_, key);
    }

    void number(const std::string &key, double &out) {
        if (const json *v = find(key)) {
            if (!v->is_number()) {
                throw ConfigError(at(key), "expected a number");
            }
            out = v->get<double>();
            if (!std::isfinite(out)) {
                throw ConfigError(at(key), "must be finite");
            }
        }
    }

    template <typename Int>
    void integer(const std::string &key, Int &out) {
        if (const json *v = find(key)) {
            if (!v->is_number_integer()) {
                throw ConfigError(at(key), "expected an integer");
            }
            out = v->get<Int>();
        }
    }

    void boolean(const std::string &key, bool &out) {
        if (const json *v = find(key)) {
            if (!v->is_boolean()) {
                throw ConfigError(at(key), "expected true or false");
            }
            out = v->get<bool>();
        }
    }

    void string(const std::string &key, std::string &out) {
        if (const json *v = find(key)) {
            if (!v->is_string()) {
                throw ConfigError(at(key), "expected a string");
            }
            out = v->get<std::string>();
        }
    }

    template <typename T>
    void list(const std::string &key, std::vector<T> &out) {
        if (const json *v = find(key)) {
            if (!v->is_array() || v->empty()) {
                throw ConfigError(at(key), "expected a nonempty array");
            }
            out.clear();
            for (std::size_t k = 0; k < v->size(); k++) {
                const json &e = (*v)[k];
                bool ok = std::is_integral_v<T> ? e.is_number_integer() : e.is_number();
                if (!ok) {
                    throw ConfigError(at(key) + "[" + std::to_string(k) + "]", "wrong element type");
                }
                out.push_back(e.get<T>());
            }
        }
    }

    void quad(const std::string &key, std::array<double, 4> &out) {
        std::vector<double> v;
        list(key, v);
        if (v.empty()) {
            return;
        }
        if (v.size() != 4) {
            throw ConfigError(at(key), "expected 4 numbers");
        }
        std::copy(v.begin(), v.end(), out.begin());
    }

    template <typename F>
    void sub(const std::string &key, F &&f) {
        if (const json *v = find(key)) {
            Section s(*v, at(key));
            f(s);
            s.done();
        }
    }

   private:
    const json &j_;
    std::string path_;
    std::set<std::string> used_;
};

void read_event(Section &s, EventSelector &e) {
    s.number("x", e.x);
    s.integer("t", e.t);
    s.integer("sign", e.sign);
}

json event_json(const EventSelector &e) {
    return {{"x", e.x}, {"t", e.t}, {"sign", e.sign}};
}

json toml_node(const toml::node &n) {
    if (const auto *t = n.as_table()) {
        json out = json::object();
        for (const auto &[k, v] : *t) {
            out[std::string(k.str())] = toml_node(v);
        }
        return out;
    }
    if (const auto *a = n.as_array()) {
        json out = json::array();
        for (const auto &v : *a) {
            out.push_back(toml_node(v));
        }
        return out;
    }
    if (const auto *v = n.as_integer()) {
        return v->get();
    }
    if (const auto *v = n.as_floating_point()) {
        return v->get();
    }
    if (const auto *v = n.as_boolean()) {
        return v->get();
    }
    if (const auto *v = n.as_string()) {
        return v->get();
    }
    throw ConfigError(n.source().path ? std::string(*n.source().path) : "config",
                      "dates and times are not supported");
}

}  // namespace

json toml_to_json(const std::string &text, const std::string &source) {
    try {
        toml::table t = toml::parse(text, source);
        return toml_node(t);
    } catch (const toml::parse_error &e) {
        std::ostringstream where;
        where << source << ":" << e.source().begin.line << ":" << e.source().begin.column;
        throw ConfigError(where.str(), std::string(e.description()));
    }
}

RunConfig config_from_json(const json &root) {
    RunConfig cfg;
    Section s(root, "");
    s.integer("seed", cfg.seed);
    s.number("tol", cfg.tol);
    s.sub("window", [&](Section &w) {
        w.integer("x_min", cfg.window.x_min);
        w.integer("x_max", cfg.window.x_max);
        w.integer("padding", cfg.window.padding);
        w.integer("max_qubits", cfg.window.max_qubits);
    });
    s.sub("dynamics", [&](Section &d) {
        d.number("theta1", cfg.dynamics.theta1);
        d.number("theta2", cfg.dynamics.theta2);
        d.integer("eta1", cfg.dynamics.eta1);
        d.integer("eta2", cfg.dynamics.eta2);
    });
    s.sub("events", [&](Section &e) {
        e.sub("a", [&](Section &a) { read_event(a, cfg.event_a); });
        e.sub("b", [&](Section &b) { read_event(b, cfg.event_b); });
    });
    s.sub("state", [&](Section &st) {
        st.quad("lambdas", cfg.lambdas);
        std::string dm;
        st.string("density_matrix", dm);
        if (!dm.empty()) {
            cfg.density_matrix = dm;
        }
    });
    s.sub("u0", [&](Section &u) {
        u.list("thetas", cfg.u0.thetas);
        u.list("etas", cfg.u0.etas);
        u.quad("lambdas", cfg.u0.lambdas);
        u.boolean("strict", cfg.u0.strict);
        u.integer("parallel", cfg.u0.parallel);
    });
    s.sub("search", [&](Section &q) {
        q.integer("restarts", cfg.search.restarts);
        q.integer("iterations", cfg.search.iterations);
        q.string("target", cfg.search.target);
    });
    s.sub("oscillator", [&](Section &o) {
        o.integer("n_levels", cfg.oscillator.trunc.n_levels);
        o.number("hbar", cfg.oscillator.trunc.hbar);
        o.number("m", cfg.oscillator.trunc.m);
        o.number("omega", cfg.oscillator.trunc.omega);
        o.number("t_min", cfg.oscillator.t_min);
        o.number("t_max", cfg.oscillator.t_max);
        o.integer("points", cfg.oscillator.points);
    });
    s.sub("regions", [&](Section &r) {
        r.sub("a", [&](Section &a) { read_event(a, cfg.regions.a); });
        r.sub("b", [&](Section &b) { read_event(b, cfg.regions.b); });
        r.string("format", cfg.regions.format);
        r.integer("t_min", cfg.regions.t_min);
        r.integer("t_max", cfg.regions.t_max);
        r.number("x_min", cfg.regions.x_min);
        r.number("x_max", cfg.regions.x_max);
    });
    s.sub("verify", [&](Section &v) {
        v.integer("haag_x_min", cfg.verify.haag_x_min);
        v.integer("haag_x_max", cfg.verify.haag_x_max);
    });
    s.done();
    return cfg;
}

json config_to_json(const RunConfig &cfg) {
    json j{{"seed", cfg.seed},
           {"tol", cfg.tol},
           {"window",
            {{"x_min", cfg.window.x_min},
             {"x_max", cfg.window.x_max},
             {"padding", cfg.window.padding},
             {"max_qubits", cfg.window.max_qubits}}},
           {"dynamics",
            {{"theta1", cfg.dynamics.theta1},
             {"theta2", cfg.dynamics.theta2},
             {"eta1", cfg.dynamics.eta1},
             {"eta2", cfg.dynamics.eta2}}},
           {"events", {{"a", event_json(cfg.event_a)}, {"b", event_json(cfg.event_b)}}},
           {"state", {{"lambdas", cfg.lambdas}}},
           {"u0",
            {{"thetas", cfg.u0.thetas},
             {"etas", cfg.u0.etas},
             {"lambdas", cfg.u0.lambdas},
             {"strict", cfg.u0.strict},
             {"parallel", cfg.u0.parallel}}},
           {"search",
            {{"restarts", cfg.search.restarts},
             {"iterations", cfg.search.iterations},
             {"target", cfg.search.target}}},
           {"oscillator",
            {{"n_levels", cfg.oscillator.trunc.n_levels},
             {"hbar", cfg.oscillator.trunc.hbar},
             {"m", cfg.oscillator.trunc.m},
             {"omega", cfg.oscillator.trunc.omega},
             {"t_min", cfg.oscillator.t_min},
             {"t_max", cfg.oscillator.t_max},
             {"points", cfg.oscillator.points}}},
           {"regions",
            {{"a", event_json(cfg.regions.a)},
             {"b", event_json(cfg.regions.b)},
             {"format", cfg.regions.format},
             {"t_min", cfg.regions.t_min},
             {"t_max", cfg.regions.t_max},
             {"x_min", cfg.regions.x_min},
             {"x_max", cfg.regions.x_max}}},
           {"verify", {{"haag_x_min", cfg.verify.haag_x_min}, {"haag_x_max", cfg.verify.haag_x_max}}}};
    if (cfg.density_matrix) {
        j["state"]["density_matrix"] = *cfg.density_matrix;
    }
    return j;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path, "cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    bool is_toml = path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0;
    json j;
    if (is_toml) {
        j = toml_to_json(text, path);
    } else {
        try {
            j = json::parse(text);
        } catch (const json::parse_error &e) {
            throw ConfigError(path, e.what());
        }
        if (j.is_object() && j.contains("config")) {
            j = j["config"];
        }
    }
    return config_from_json(j);
}

namespace {

void check_event(const EventSelector &e, const std::string &path) {
    if (std::abs(2 * e.x - std::round(2 * e.x)) > 1e-12) {
        throw ConfigError(path + ".x", "must be a multiple of 1/2");
    }
    if (e.sign != 1 && e.sign != -1) {
        throw ConfigError(path + ".sign", "must be +1 or -1");
    }
}

template <typename F>
void as_config_error(const std::string &path, F &&f) {
    try {
        f();
    } catch (const Error &e) {
        throw ConfigError(path, e.what());
    }
}

}  // namespace

void validate_config(const RunConfig &cfg) {
    if (!(cfg.tol > 0)) {
        throw ConfigError("tol", "must be positive");
    }
    as_config_error("window", [&] { cfg.window.validate(); });
    as_config_error("dynamics", [&] { cfg.dynamics.validate(); });
    check_event(cfg.event_a, "events.a");
    check_event(cfg.event_b, "events.b");
    check_event(cfg.regions.a, "regions.a");
    check_event(cfg.regions.b, "regions.b");
    for (const auto &[quad, path] : {std::pair{&cfg.lambdas, "state.lambdas"}, {&cfg.u0.lambdas, "u0.lambdas"}}) {
        double sum = 0;
        for (double l : *quad) {
            if (!(l > 0)) {
                throw ConfigError(path, "BadLambdas: every lambda must be positive");
            }
            sum += l;
        }
        if (std::abs(sum - 4) > 1e-12) {
            throw ConfigError(path, "BadLambdas: lambdas must sum to 4");
        }
    }
    if (cfg.u0.strict && std::abs(cfg.u0.lambdas[0] - cfg.u0.lambdas[1]) > 1e-12) {
        throw ConfigError("u0.lambdas", "BadLambdas: the U0 sweep needs l1 == l2 (set u0.strict = false to report)");
    }
    for (double th : cfg.u0.thetas) {
        as_config_error("u0.thetas", [&] { DynamicsParams{th, th, 1, 1}.validate(); });
    }
    for (int e : cfg.u0.etas) {
        if (e != 1 && e != -1) {
            throw ConfigError("u0.etas", "entries must be +1 or -1");
        }
    }
    if (cfg.u0.parallel < 1) {
        throw ConfigError("u0.parallel", "must be >= 1");
    }
    if (cfg.search.restarts < 1) {
        throw ConfigError("search.restarts", "must be >= 1");
    }
    if (cfg.search.iterations < 1) {
        throw ConfigError("search.iterations", "must be >= 1");
    }
    if (cfg.search.target != "wpast" && cfg.search.target != "first_guess") {
        throw ConfigError("search.target", "expected wpast or first_guess");
    }
    as_config_error("oscillator", [&] { cfg.oscillator.trunc.validate(); });
    if (cfg.oscillator.points < 2) {
        throw ConfigError("oscillator.points", "must be >= 2");
    }
    if (cfg.regions.format != "text" && cfg.regions.format != "svg") {
        throw ConfigError("regions.format", "expected text or svg");
    }
    if (cfg.regions.t_min > cfg.regions.t_max || cfg.regions.x_min > cfg.regions.x_max) {
        throw ConfigError("regions", "empty viewport");
    }
    as_config_error("verify", [&] {
        ChainConfig{cfg.verify.haag_x_min, cfg.verify.haag_x_max, 0, 12}.validate();
    });
}

}  // namespace qising::cli
