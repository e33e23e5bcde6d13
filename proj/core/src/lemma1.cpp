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

#include "qising/commoncause.hpp"
#include "qising/error.hpp"

namespace qising {

namespace {

double phi_re(const State &phi, const CMat &m) {
    return evaluate(phi, m).real();
}

// Unitary in M_d sending range(b) onto a subspace that contains range(b').
CMat covering_unitary(const CMat &b) {
    int d = static_cast<int>(b.rows());
    EigenSystem es = hermitian_eig(0.5 * (b + b.adjoint()), 1e-8);
    int r = static_cast<int>(std::lround(b.trace().real()));
    // ascending: first d - r columns span range(b'), the last r span range(b)
    CMat source(d, d);
    CMat target(d, d);
    source.leftCols(r) = es.vectors.rightCols(r);
    source.rightCols(d - r) = es.vectors.leftCols(d - r);
    target.leftCols(d - r) = es.vectors.leftCols(d - r);
    target.rightCols(r) = es.vectors.rightCols(r);
    return target * source.adjoint();
}

}  // namespace

TensorSplit::TensorSplit(SpanBasis n_basis, SpanBasis n1_basis, std::uint64_t seed)
    : n_(std::move(n_basis)), n1_(std::move(n1_basis)) {
    if (n_.ambient_dim() != n1_.ambient_dim()) {
        fail(Errc::ShapeMismatch, "N and N1 live in different ambient dimensions");
    }
    for (const auto &x : n1_.elements()) {
        if (n_.residual(x) > 1e-9) {
            fail(Errc::NotInSpan, "N1 is not contained in N");
        }
    }
    decompose_simple(n1_, seed);
    n2_ = relative_commutant(n1_.elements(), n_, 1e-9);
    iso2_ = decompose_simple(n2_, seed + 1);
}

double TensorSplit::commute_defect() const {
    double worst = 0;
    for (const auto &x : n1_.elements()) {
        for (const auto &y : n2_.elements()) {
            worst = std::max(worst, hs_norm(commutator(x, y)));
        }
    }
    return worst;
}

Lemma1Path::Lemma1Path(const TensorSplit &split, const State &phi, CMat a, CMat b)
    : iso_(split.iso2()), phi_(phi), a_(std::move(a)), b_(std::move(b)) {
    b_perp_ = complement(b_);
    log_v_ = unitary_log(covering_unitary(iso_.to_factor(b_)), 1e-9);
    CMat ap = complement(a_);
    target_ = phi_re(phi_, ap * b_perp_) / phi_re(phi_, ap);
}

CMat Lemma1Path::unitary(double t) const {
    return iso_.from_factor(expm(t * log_v_));
}

CMat Lemma1Path::c(double t) const {
    CMat u = unitary(t);
    return a_ * (u * b_ * u.adjoint());
}

double Lemma1Path::denominator(double t) const {
    return phi_re(phi_, a_ - c(t));
}

double Lemma1Path::f(double t) const {
    CMat ct = c(t);
    CMat cp = complement(ct);
    double den = phi_re(phi_, cp * a_);
    if (!(den > 1e-14)) {
        fail(Errc::BracketFailure, "phi(C(t)' A) is not positive at t = " + std::to_string(t));
    }
    return phi_re(phi_, cp * a_ * b_perp_ * cp) / den;
}

CommonCauseCertificate lemma1_construct(const TensorSplit &split, const State &phi, const CMat &a, const CMat &b,
                                        const Lemma1Options &opt) {
    const double ptol = 1e-10;
    for (const CMat *p : {&a, &b}) {
        if (!is_projection(*p, ptol)) {
            fail(Errc::InvalidArgument, "events must be projections");
        }
        if (hs_norm(*p) < ptol || hs_norm(complement(*p)) < ptol) {
            fail(Errc::DegenerateEvent, "event is 0 or 1");
        }
    }
    if (split.n1().residual(a) > 1e-9) {
        fail(Errc::NotInSpan, "A is not in N1");
    }
    if (split.n2().residual(b) > 1e-9) {
        fail(Errc::NotInSpan, "B is not in N2");
    }
    CMat rho_n = split.n().project(phi.rho());
    double margin = hermitian_eig(0.5 * (rho_n + rho_n.adjoint()), 1e-8).values(0);
    if (!(margin > 1e-12)) {
        fail(Errc::NotFaithful, "state restricted to N has smallest eigenvalue " + std::to_string(margin));
    }
    double corr = correlation(phi, a, b, ptol);
    if (std::abs(corr) <= 1e-10) {
        fail(Errc::NotCorrelated, "phi(AB) - phi(A)phi(B) = " + std::to_string(corr));
    }

    CommonCauseCertificate cert;
    cert.correlation = corr;
    CMat aw = a;
    CMat bw = b;
    if (ntrace(b).real() < 0.5 - 1e-12) {
        aw = complement(a);
        bw = complement(b);
        cert.events_swapped = true;
    }
    Lemma1Path path(split, phi, aw, bw);
    cert.target = path.target();
    cert.f_at_0 = path.f(0);
    cert.f_at_1 = path.f(1);
    double lo = 0;
    double hi = 1;
    if (!(cert.f_at_0 - cert.target > 0) || !(cert.f_at_1 - cert.target < 0)) {
        fail(Errc::BracketFailure, "F(0) - target and F(1) - target do not change sign");
    }
    double mid = 0.5;
    int it = 0;
    for (; it < opt.max_iterations; it++) {
        mid = 0.5 * (lo + hi);
        double g = path.f(mid) - cert.target;
        if (std::abs(g) < opt.df || hi - lo < opt.dt) {
            break;
        }
        (g > 0 ? lo : hi) = mid;
    }
    cert.iterations = it;
    cert.t_prime = mid;
    CMat c = path.c(mid);
    c = 0.5 * (c + c.adjoint());
    if (!is_projection(c, ptol)) {
        fail(Errc::InvalidArgument, "C(t') is not a projection");
    }
    cert.c = c;
    cert.subprojection_defect = hs_norm(c * aw * c - c);
    Partition part({c, complement(c)}, 1e-9);
    cert.screening = screening_check(phi, a, b, part);
    cert.localization_residual = split.n().residual(c);
    cert.nontrivial = !triviality_check(part, a, b, ptol);
    cert.reichenbach = reichenbach_flags(phi, a, b, c, opt.tol);
    cert.commutator_a = hs_norm(commutator(c, a));
    cert.commutator_b = hs_norm(commutator(c, b));
    cert.commutes_with_a = cert.commutator_a < ptol;
    cert.commutes_with_b = cert.commutator_b < ptol;
    return cert;
}

}  // namespace qising
