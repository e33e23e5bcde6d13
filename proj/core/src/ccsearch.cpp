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
#include <limits>
#include <random>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "detail.hpp"
#include "qising/commoncause.hpp"
#include "qising/error.hpp"

namespace qising {

namespace {

constexpr double kTrivialRadius = 0.1;

double screening_residual(const State &phi, const CMat &ab, const CMat &apbp, const CMat &abp, const CMat &apb,
                          const CMat &c) {
    auto v = [&](const CMat &x) { return evaluate(phi, c * x * c); };
    return std::abs(v(ab) * v(apbp) - v(abp) * v(apb));
}

struct Problem {
    const State *phi;
    CMat a, b, ab, apbp, abp, apb;
    std::vector<CMat> herm;

    CMat candidate(const gsl_vector *x) const {
        int dim = static_cast<int>(a.rows());
        CMat h = CMat::Zero(dim, dim);
        for (std::size_t k = 0; k < herm.size(); k++) {
            h += gsl_vector_get(x, k) * herm[k];
        }
        return median_projection(h);
    }

    // Spectral projection onto eigenvalues strictly above the median.
    static CMat median_projection(const CMat &h) {
        Eigen::SelfAdjointEigenSolver<CMat> es(detail::hermitian_part(h));
        const auto &vals = es.eigenvalues();
        Eigen::Index n = vals.size();
        double median = vals(n / 2 - (n % 2 == 0 ? 1 : 0));
        double spread = std::max(1e-300, vals(n - 1) - vals(0));
        CMat p = CMat::Zero(n, n);
        for (Eigen::Index k = 0; k < n; k++) {
            if (vals(k) > median + 1e-9 * spread) {
                p += es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
            }
        }
        return p;
    }

    double objective(const CMat &c) const {
        CMat cp = complement(c);
        double r1 = screening_residual(*phi, ab, apbp, abp, apb, c);
        double r2 = screening_residual(*phi, ab, apbp, abp, apb, cp);
        double val = r1 * r1 + r2 * r2;
        double d1 = subprojection_distance(c, a, b);
        double d2 = subprojection_distance(cp, a, b);
        if (d1 < kTrivialRadius && d2 < kTrivialRadius) {
            double gap = kTrivialRadius - std::max(d1, d2);
            val += gap * gap;
        }
        return val;
    }
};

double gsl_objective(const gsl_vector *x, void *params) {
    const auto *p = static_cast<const Problem *>(params);
    return p->objective(p->candidate(x));
}

struct LocalResult {
    std::vector<double> x;
    double value;
};

LocalResult minimize(Problem &prob, const std::vector<double> &start, int iterations) {
    std::size_t n = start.size();
    gsl_multimin_function fn{&gsl_objective, n, &prob};
    gsl_vector *x = gsl_vector_alloc(n);
    gsl_vector *step = gsl_vector_alloc(n);
    for (std::size_t k = 0; k < n; k++) {
        gsl_vector_set(x, k, start[k]);
    }
    gsl_vector_set_all(step, 0.5);
    gsl_multimin_fminimizer *s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
    gsl_multimin_fminimizer_set(s, &fn, x, step);
    for (int it = 0; it < iterations; it++) {
        if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) {
            break;
        }
        if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-10) == GSL_SUCCESS) {
            break;
        }
    }
    LocalResult out{std::vector<double>(n), gsl_multimin_fminimizer_minimum(s)};
    const gsl_vector *best = gsl_multimin_fminimizer_x(s);
    for (std::size_t k = 0; k < n; k++) {
        out.x[k] = gsl_vector_get(best, k);
    }
    gsl_multimin_fminimizer_free(s);
    gsl_vector_free(step);
    gsl_vector_free(x);
    return out;
}

}  // namespace

CandidateReport evaluate_candidate(const State &phi, const CMat &a, const CMat &b, const CMat &c) {
    CMat ap = complement(a);
    CMat bp = complement(b);
    CMat cp = complement(c);
    CandidateReport rep;
    rep.residual = std::max(screening_residual(phi, a * b, ap * bp, a * bp, ap * b, c),
                            screening_residual(phi, a * b, ap * bp, a * bp, ap * b, cp));
    rep.trivial = subprojection_distance(c, a, b) < 1e-10 && subprojection_distance(cp, a, b) < 1e-10;
    return rep;
}

SearchReport commuting_cc_search(const State &phi, const CMat &a, const CMat &b, const SpanBasis &target,
                                 const SearchOptions &opt) {
    if (target.ambient_dim() != phi.dim() || a.rows() != phi.dim() || b.rows() != phi.dim()) {
        fail(Errc::ShapeMismatch, "state, events and target algebra differ in dimension");
    }
    if (opt.restarts < 1 || opt.iterations < 1) {
        fail(Errc::InvalidArgument, "restarts and iterations must be positive");
    }
    std::vector<CMat> events{a, b};
    SpanBasis s = relative_commutant(events, target, 1e-9);
    SearchReport rep;
    rep.commutant_dim = s.size();
    rep.caveat =
        "heuristic search: a positive best residual is evidence only and does not prove that no "
        "commuting common cause exists";
    if (s.size() <= 1) {
        fail(Errc::EmptyCommutant, "only scalars in the target algebra commute with A and B");
    }

    Problem prob{&phi, a, b, {}, {}, {}, {}, {}};
    CMat ap = complement(a);
    CMat bp = complement(b);
    prob.ab = a * b;
    prob.apbp = ap * bp;
    prob.abp = a * bp;
    prob.apb = ap * b;
    std::vector<CMat> parts;
    for (const auto &e : s.elements()) {
        parts.push_back(detail::hermitian_part(e));
        parts.push_back(detail::hermitian_part(cplx(0, -1) * e));
    }
    SpanBasis herm = orthonormalize(parts, phi.dim(), 1e-9);
    for (const auto &h : herm.elements()) {
        // drop the scalar direction, it does not move the spectral projection
        if (hs_norm(h - ntrace(h) * identity(phi.dim())) > 1e-9) {
            prob.herm.push_back(detail::hermitian_part(h));
        }
    }

    gsl_set_error_handler_off();
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> g;
    double best = std::numeric_limits<double>::infinity();
    CMat best_c;
    for (int r = 0; r < opt.restarts; r++) {
        std::vector<double> start(prob.herm.size());
        for (auto &v : start) {
            v = g(rng);
        }
        LocalResult first = minimize(prob, start, opt.iterations);
        LocalResult again = minimize(prob, first.x, opt.iterations);
        const LocalResult &keep = again.value < first.value ? again : first;
        gsl_vector_const_view xv = gsl_vector_const_view_array(keep.x.data(), keep.x.size());
        CMat c = prob.candidate(&xv.vector);
        double res = evaluate_candidate(phi, a, b, c).residual;
        rep.restart_residuals.push_back(res);
        if (keep.value < best) {
            best = keep.value;
            best_c = c;
        }
    }
    rep.restarts = opt.restarts;
    rep.best_c = best_c;
    CandidateReport cr = evaluate_candidate(phi, a, b, best_c);
    rep.best_residual = cr.residual;
    rep.best_trivial = cr.trivial;
    return rep;
}

}  // namespace qising
