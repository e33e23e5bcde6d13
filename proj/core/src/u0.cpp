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

#include <algorithm>
#include <cmath>
#include <future>
#include <memory>

#include "qising/commoncause.hpp"
#include "qising/error.hpp"

namespace qising {

namespace {

U0Entry run_point(const std::shared_ptr<const IsingNet> &net, const DynamicsParams &p,
                  const std::array<double, 4> &lambdas) {
    Automorphism dyn(net, p);
    AdjacentScenario s = adjacent_scenario(dyn);
    State phi = build_corr_state(s.a, s.b, lambdas);
    CMat one = identity(net->dim());
    CMat u0 = net->matrix(HalfIndex::integer(0));
    CMat c = 0.5 * (one + u0);
    Partition part({c, 0.5 * (one - u0)});
    U0Entry e;
    e.params = p;
    e.residual = screening_check(phi, s.a, s.b, part).max_residual;
    e.correlation = correlation(phi, s.a, s.b);
    e.commutator_a = hs_norm(commutator(c, s.a));
    e.commutator_b = hs_norm(commutator(c, s.b));
    return e;
}

}  // namespace

std::vector<DynamicsParams> dynamics_grid(const std::vector<double> &thetas, const std::vector<int> &etas) {
    std::vector<DynamicsParams> out;
    for (double t1 : thetas) {
        for (double t2 : thetas) {
            for (int e1 : etas) {
                for (int e2 : etas) {
                    DynamicsParams p{t1, t2, e1, e2};
                    p.validate();
                    out.push_back(p);
                }
            }
        }
    }
    return out;
}

U0Report u0_universal_check(const std::vector<DynamicsParams> &grid, const std::array<double, 4> &lambdas,
                            const U0Options &opt) {
    U0Report rep;
    rep.lambdas = lambdas;
    bool equal = std::abs(lambdas[0] - lambdas[1]) < 1e-12;
    bool sums = std::abs(lambdas[0] + lambdas[1] - lambdas[2] - lambdas[3]) < 1e-12;
    rep.preconditions_met = equal && sums;
    if (opt.strict && !equal) {
        fail(Errc::BadLambdas, "the U0 check needs l1 == l2");
    }
    rep.caveat =
        "{1/2(1 +- U_0)} lies on a common Cauchy surface with the correlating events; it is not "
        "in their strict past.";
    auto net = std::make_shared<const IsingNet>(adjacent_window());
    rep.entries.resize(grid.size());
    int workers = std::max(1, opt.parallel);
    if (workers == 1) {
        for (std::size_t i = 0; i < grid.size(); i++) {
            rep.entries[i] = run_point(net, grid[i], lambdas);
        }
    } else {
        for (std::size_t start = 0; start < grid.size(); start += static_cast<std::size_t>(workers)) {
            std::vector<std::future<U0Entry>> jobs;
            std::size_t stop = std::min(grid.size(), start + static_cast<std::size_t>(workers));
            for (std::size_t i = start; i < stop; i++) {
                jobs.push_back(std::async(std::launch::async, run_point, net, grid[i], lambdas));
            }
            for (std::size_t i = start; i < stop; i++) {
                rep.entries[i] = jobs[i - start].get();
            }
        }
    }
    for (const auto &e : rep.entries) {
        rep.max_residual = std::max(rep.max_residual, e.residual);
    }
    return rep;
}

}  // namespace qising
