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

#include "qising/probspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qising/error.hpp"

namespace qising {

namespace {

void require_projection(const CMat &p, const char *name, double tol) {
    if (!is_projection(p, tol)) {
        fail(Errc::InvalidArgument, std::string(name) + " is not a projection");
    }
}

double commutator_norm(const CMat &a, const CMat &b) {
    return hs_norm(commutator(a, b));
}

struct FourProducts {
    CMat ab, apbp, abp, apb;
};

FourProducts products(const CMat &a, const CMat &b) {
    CMat ap = complement(a);
    CMat bp = complement(b);
    return {a * b, ap * bp, a * bp, ap * b};
}

template <typename F>
ScreeningResult screen_with(const CMat &a, const CMat &b, const Partition &part, F phi_of) {
    FourProducts f = products(a, b);
    ScreeningResult out;
    for (const auto &c : part.cells()) {
        cplx lhs = phi_of(f.ab, c) * phi_of(f.apbp, c);
        cplx rhs = phi_of(f.abp, c) * phi_of(f.apb, c);
        double r = std::abs(lhs - rhs);
        out.residuals.push_back(r);
        out.max_residual = std::max(out.max_residual, r);
    }
    return out;
}

}  // namespace

State::State(CMat rho, std::optional<CorrStateInfo> info, double tol) : rho_(std::move(rho)), info_(info) {
    if (rho_.rows() != rho_.cols() || rho_.rows() == 0) {
        fail(Errc::ShapeMismatch, "density matrix must be square");
    }
    if (!is_hermitian(rho_, tol)) {
        fail(Errc::NotHermitian, "density matrix is not self-adjoint");
    }
    cplx tr = ntrace(rho_);
    if (std::abs(tr - 1.0) > tol) {
        fail(Errc::WrongTrace, "normalized trace of rho is " + std::to_string(tr.real()));
    }
    rho_ = 0.5 * (rho_ + rho_.adjoint());
    margin_ = hermitian_eig(rho_).values(0);
    if (margin_ < -tol) {
        fail(Errc::InvalidArgument, "density matrix has a negative eigenvalue " + std::to_string(margin_));
    }
}

State State::tracial(int dim) {
    return State(identity(dim));
}

Partition::Partition(std::vector<CMat> projections, double tol) : cells_(std::move(projections)) {
    if (cells_.empty()) {
        fail(Errc::InvalidArgument, "empty partition");
    }
    int dim = static_cast<int>(cells_.front().rows());
    CMat sum = CMat::Zero(dim, dim);
    for (std::size_t k = 0; k < cells_.size(); k++) {
        require_projection(cells_[k], "partition cell", tol);
        for (std::size_t l = k + 1; l < cells_.size(); l++) {
            if (hs_norm(cells_[k] * cells_[l]) > tol) {
                fail(Errc::InvalidArgument, "partition cells are not orthogonal");
            }
        }
        sum += cells_[k];
    }
    if (hs_norm(sum - identity(dim)) > tol) {
        fail(Errc::InvalidArgument, "partition cells do not sum to the identity");
    }
}

Partition Partition::from_projection(const CMat &c) {
    return Partition({c, complement(c)});
}

void EventPair::validate(double tol) const {
    require_projection(a, "A", tol);
    require_projection(b, "B", tol);
    if (commutator_norm(a, b) > tol) {
        fail(Errc::NotCommuting, "events do not commute");
    }
    if (!spacelike_separated(region_a, region_b)) {
        fail(Errc::InvalidArgument, "event regions are not spacelike separated");
    }
}

cplx evaluate(const State &phi, const CMat &m) {
    if (m.rows() != phi.dim() || m.cols() != phi.dim()) {
        fail(Errc::ShapeMismatch, "operator and state dimensions differ");
    }
    return phi.rho().transpose().cwiseProduct(m).sum() / static_cast<double>(phi.dim());
}

CMat complement(const CMat &p) {
    return identity(static_cast<int>(p.rows())) - p;
}

State build_corr_state(const CMat &a, const CMat &b, const std::array<double, 4> &lambdas, double tol) {
    double sum = 0;
    for (double l : lambdas) {
        if (!(l > 0) || !std::isfinite(l)) {
            fail(Errc::BadLambdas, "every lambda must be positive");
        }
        sum += l;
    }
    if (std::abs(sum - 4) > 1e-12) {
        fail(Errc::BadLambdas, "lambdas must sum to 4, got " + std::to_string(sum));
    }
    require_projection(a, "A", tol);
    require_projection(b, "B", tol);
    if (commutator_norm(a, b) > tol) {
        fail(Errc::NotCommuting, "A and B do not commute");
    }
    if (std::abs(ntrace(a) - 0.5) > tol || std::abs(ntrace(b) - 0.5) > tol) {
        fail(Errc::WrongTrace, "A and B need normalized trace 1/2");
    }
    FourProducts f = products(a, b);
    CMat rho = lambdas[0] * f.ab + lambdas[1] * f.apbp + lambdas[2] * f.apb + lambdas[3] * f.abp;
    CorrStateInfo info;
    info.lambdas = lambdas;
    info.sum_restriction = std::abs(lambdas[0] + lambdas[1] - lambdas[2] - lambdas[3]) < 1e-12;
    return State(std::move(rho), info, tol);
}

double correlation(const State &phi, const CMat &a, const CMat &b, double tol) {
    if (commutator_norm(a, b) > tol) {
        fail(Errc::NotCommuting, "||[A,B]|| = " + std::to_string(commutator_norm(a, b)));
    }
    return (evaluate(phi, a * b) - evaluate(phi, a) * evaluate(phi, b)).real();
}

CMat conditional_expectation(const Partition &part, const CMat &m) {
    CMat out = CMat::Zero(m.rows(), m.cols());
    for (const auto &c : part.cells()) {
        out += c * m * c;
    }
    return out;
}

ScreeningResult screening_check(const State &phi, const CMat &a, const CMat &b, const Partition &part) {
    return screen_with(a, b, part, [&](const CMat &x, const CMat &c) { return evaluate(phi, c * x * c); });
}

ScreeningResult screening_via_expectation(const State &phi, const CMat &a, const CMat &b, const Partition &part) {
    return screen_with(a, b, part, [&](const CMat &x, const CMat &c) {
        return evaluate(phi, conditional_expectation(part, x * c));
    });
}

ScreeningResult screening_plain(const State &phi, const CMat &a, const CMat &b, const Partition &part) {
    return screen_with(a, b, part, [&](const CMat &x, const CMat &c) { return evaluate(phi, x * c); });
}

ReichenbachReport reichenbach_flags(const State &phi, const CMat &a, const CMat &b, const CMat &c, double tol) {
    CMat cp = complement(c);
    double pc = evaluate(phi, c).real();
    double pcp = evaluate(phi, cp).real();
    if (pc < 1e-12 || pcp < 1e-12) {
        fail(Errc::ZeroConditioner, "phi(C) or phi(C') vanishes");
    }
    auto cond = [&](const CMat &x, const CMat &k, double pk) { return evaluate(phi, k * x * k).real() / pk; };
    ReichenbachReport r;
    r.p_a_c = cond(a, c, pc);
    r.p_a_cperp = cond(a, cp, pcp);
    r.p_b_c = cond(b, c, pc);
    r.p_b_cperp = cond(b, cp, pcp);
    CMat ab = a * b;
    r.screen_c_residual = std::abs(cond(ab, c, pc) - r.p_a_c * r.p_b_c);
    r.screen_cperp_residual = std::abs(cond(ab, cp, pcp) - r.p_a_cperp * r.p_b_cperp);
    r.screen_c = r.screen_c_residual < tol;
    r.screen_cperp = r.screen_cperp_residual < tol;
    r.pos_impact_a = r.p_a_c > r.p_a_cperp + tol;
    r.pos_impact_b = r.p_b_c > r.p_b_cperp + tol;
    return r;
}

ReichenbachReport reichenbach_check(const State &phi, const CMat &a, const CMat &b, const CMat &c, double tol) {
    if (commutator_norm(c, a) > tol || commutator_norm(c, b) > tol) {
        fail(Errc::NotCommuting, "C must commute with A and B");
    }
    return reichenbach_flags(phi, a, b, c, tol);
}

double subprojection_distance(const CMat &c, const CMat &a, const CMat &b) {
    double best = hs_norm(c * a * c - c);
    for (const CMat &x : {complement(a), b, complement(b)}) {
        best = std::min(best, hs_norm(c * x * c - c));
    }
    return best;
}

bool triviality_check(const Partition &part, const CMat &a, const CMat &b, double tol) {
    return std::all_of(part.cells().begin(), part.cells().end(),
                       [&](const CMat &c) { return subprojection_distance(c, a, b) < tol; });
}

}  // namespace qising
