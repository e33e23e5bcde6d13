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

#include <cmath>

#include "qising/error.hpp"
#include "qising/json.hpp"

namespace qising {

using nlohmann::json;

json cmat_to_json(const CMat &m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        for (Eigen::Index k = 0; k < m.cols(); k++) {
            out.push_back({m(i, k).real(), m(i, k).imag()});
        }
    }
    return out;
}

CMat cmat_from_json(const json &j) {
    if (!j.is_array()) {
        fail(Errc::InvalidArgument, "matrix must be an array of [re, im] pairs");
    }
    auto n = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(j.size()))));
    if (n == 0 || static_cast<std::size_t>(n * n) != j.size()) {
        fail(Errc::ShapeMismatch, "matrix has " + std::to_string(j.size()) + " entries, not a square");
    }
    CMat m(n, n);
    for (Eigen::Index i = 0; i < n; i++) {
        for (Eigen::Index k = 0; k < n; k++) {
            const json &e = j[static_cast<std::size_t>(i * n + k)];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                fail(Errc::InvalidArgument, "entry " + std::to_string(i * n + k) + " is not [re, im]");
            }
            m(i, k) = cplx(e[0].get<double>(), e[1].get<double>());
        }
    }
    return m;
}

void to_json(json &j, const HalfIndex &h) {
    j = h.value();
}

void to_json(json &j, const MinimalCone &c) {
    j = json{{"x", c.x.value()}, {"t", c.t}};
}

void to_json(json &j, const Region &r) {
    j = json{{"cones", r.minimals()}, {"text", r.str()}};
    if (r.is_double_cone()) {
        j["n"] = r.n();
    }
}

void to_json(json &j, const DynamicsParams &p) {
    j = json{{"theta1", p.theta1}, {"theta2", p.theta2}, {"eta1", p.eta1}, {"eta2", p.eta2}};
}

void from_json(const json &j, DynamicsParams &p) {
    p.theta1 = j.value("theta1", p.theta1);
    p.theta2 = j.value("theta2", p.theta2);
    p.eta1 = j.value("eta1", p.eta1);
    p.eta2 = j.value("eta2", p.eta2);
}

void to_json(json &j, const ScreeningResult &s) {
    j = json{{"residuals", s.residuals}, {"max_residual", s.max_residual}};
}

void to_json(json &j, const ReichenbachReport &r) {
    j = json{{"p_a_given_c", r.p_a_c},
             {"p_a_given_cperp", r.p_a_cperp},
             {"p_b_given_c", r.p_b_c},
             {"p_b_given_cperp", r.p_b_cperp},
             {"screen_c_residual", r.screen_c_residual},
             {"screen_cperp_residual", r.screen_cperp_residual},
             {"screen_c", r.screen_c},
             {"screen_cperp", r.screen_cperp},
             {"pos_impact_a", r.pos_impact_a},
             {"pos_impact_b", r.pos_impact_b}};
}

void to_json(json &j, const CommonCauseCertificate &c) {
    j = json{{"t_prime", c.t_prime},
             {"screening", c.screening},
             {"localization_residual", c.localization_residual},
             {"nontrivial", c.nontrivial},
             {"reichenbach", c.reichenbach},
             {"commutator_a", c.commutator_a},
             {"commutator_b", c.commutator_b},
             {"commutes_with_a", c.commutes_with_a},
             {"commutes_with_b", c.commutes_with_b},
             {"events_swapped", c.events_swapped},
             {"subprojection_defect", c.subprojection_defect},
             {"correlation", c.correlation},
             {"target", c.target},
             {"f_at_0", c.f_at_0},
             {"f_at_1", c.f_at_1},
             {"iterations", c.iterations}};
    if (c.localization) {
        j["localization"] = *c.localization;
    }
}

void to_json(json &j, const U0Entry &e) {
    j = json{{"dynamics", e.params},
             {"residual", e.residual},
             {"correlation", e.correlation},
             {"commutator_a", e.commutator_a},
             {"commutator_b", e.commutator_b}};
}

void to_json(json &j, const U0Report &r) {
    j = json{{"lambdas", r.lambdas},
             {"entries", r.entries},
             {"max_residual", r.max_residual},
             {"preconditions_met", r.preconditions_met},
             {"caveat", r.caveat}};
}

void to_json(json &j, const SearchReport &r) {
    j = json{{"best_residual", r.best_residual},
             {"best_trivial", r.best_trivial},
             {"commutant_dim", r.commutant_dim},
             {"restart_residuals", r.restart_residuals},
             {"restarts", r.restarts},
             {"claims_nonexistence", r.claims_nonexistence},
             {"caveat", r.caveat}};
}

}  // namespace qising
