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
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "detail.hpp"
#include "qising/error.hpp"
#include "qising/matrixcore.hpp"

namespace qising {

namespace {

void require_square(const CMat &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        fail(Errc::ShapeMismatch, std::string(what) + " needs a nonempty square matrix");
    }
}

Eigen::Map<const CVec> flat(const CMat &m) {
    return {m.data(), m.size()};
}

}  // namespace

cplx ntrace(const CMat &m) {
    return m.trace() / static_cast<double>(m.rows());
}

cplx hs_inner(const CMat &x, const CMat &y) {
    return flat(x).dot(flat(y)) / static_cast<double>(x.rows());
}

double hs_norm(const CMat &m) {
    return m.norm() / std::sqrt(static_cast<double>(m.rows()));
}

CMat identity(int dim) {
    return CMat::Identity(dim, dim);
}

CMat commutator(const CMat &a, const CMat &b) {
    return a * b - b * a;
}

bool is_hermitian(const CMat &m, double tol) {
    return m.rows() == m.cols() && hs_norm(m - m.adjoint()) < tol;
}

bool is_unitary(const CMat &m, double tol) {
    return m.rows() == m.cols() && hs_norm(m * m.adjoint() - identity(static_cast<int>(m.rows()))) < tol;
}

bool is_projection(const CMat &p, double tol) {
    if (p.rows() != p.cols()) {
        return false;
    }
    return hs_norm(p * p - p) < tol && hs_norm(p - p.adjoint()) < tol;
}

EigenSystem hermitian_eig(const CMat &m, double tol) {
    require_square(m, "hermitian_eig");
    if (!is_hermitian(m, tol)) {
        fail(Errc::NotHermitian, "||M - M*|| = " + std::to_string(hs_norm(m - m.adjoint())));
    }
    Eigen::SelfAdjointEigenSolver<CMat> es(detail::hermitian_part(m));
    return {es.eigenvalues(), es.eigenvectors()};
}

CMat unitary_log(const CMat &v, double tol) {
    require_square(v, "unitary_log");
    if (!is_unitary(v, tol)) {
        fail(Errc::NotUnitary, "||V V* - 1|| = " +
                                   std::to_string(hs_norm(v * v.adjoint() - identity(static_cast<int>(v.rows())))));
    }
    Eigen::ComplexSchur<CMat> schur(v);
    const CMat &t = schur.matrixT();
    const CMat &q = schur.matrixU();
    CVec phases(v.rows());
    for (Eigen::Index k = 0; k < v.rows(); k++) {
        double a = std::arg(t(k, k));
        if (a <= -std::numbers::pi + 1e-12) {
            a = std::numbers::pi;
        }
        phases(k) = cplx(0, a);
    }
    CMat k = q * phases.asDiagonal() * q.adjoint();
    return 0.5 * (k - k.adjoint());
}

CMat expm(const CMat &k) {
    require_square(k, "expm");
    double scale = std::max(1.0, hs_norm(k));
    if (hs_norm(k + k.adjoint()) < 1e-12 * scale) {
        // k = -i h with h Hermitian
        CMat h = cplx(0, 1) * k;
        Eigen::SelfAdjointEigenSolver<CMat> es(detail::hermitian_part(h));
        CVec ph(k.rows());
        for (Eigen::Index j = 0; j < k.rows(); j++) {
            ph(j) = std::exp(cplx(0, -es.eigenvalues()(j)));
        }
        return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    }
    return k.exp();
}

SpanBasis::SpanBasis(int ambient_dim) : dim_(ambient_dim) {
}

SpanBasis SpanBasis::from_orthonormal(int ambient_dim, std::vector<CMat> elements) {
    SpanBasis out(ambient_dim);
    out.elements_ = std::move(elements);
    return out;
}

bool SpanBasis::try_add(const CMat &m, double tol) {
    if (m.rows() != dim_ || m.cols() != dim_) {
        fail(Errc::ShapeMismatch, "span element has wrong shape");
    }
    double in = hs_norm(m);
    if (in == 0) {
        return false;
    }
    CMat v = m;
    for (int pass = 0; pass < 2; pass++) {
        for (const auto &b : elements_) {
            v -= hs_inner(b, v) * b;
        }
    }
    double n = hs_norm(v);
    if (n <= tol * std::max(1.0, in)) {
        return false;
    }
    elements_.push_back(v / n);
    return true;
}

CVec SpanBasis::coefficients(const CMat &m) const {
    CVec c(elements_.size());
    for (std::size_t k = 0; k < elements_.size(); k++) {
        c(k) = hs_inner(elements_[k], m);
    }
    return c;
}

CMat SpanBasis::combine(const CVec &coeffs) const {
    CMat out = CMat::Zero(dim_, dim_);
    for (std::size_t k = 0; k < elements_.size(); k++) {
        if (coeffs(k) != cplx(0)) {
            out += coeffs(k) * elements_[k];
        }
    }
    return out;
}

CMat SpanBasis::project(const CMat &m) const {
    return combine(coefficients(m));
}

double SpanBasis::residual(const CMat &m) const {
    return hs_norm(m - project(m));
}

double SpanBasis::gram_defect() const {
    double worst = 0;
    for (std::size_t i = 0; i < elements_.size(); i++) {
        for (std::size_t j = i; j < elements_.size(); j++) {
            cplx g = hs_inner(elements_[i], elements_[j]);
            worst = std::max(worst, std::abs(g - (i == j ? cplx(1) : cplx(0))));
        }
    }
    return worst;
}

bool SpanBasis::is_star_closed(double tol) const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [&](const CMat &e) { return residual(e.adjoint()) < tol; });
}

SpanBasis orthonormalize(std::span<const CMat> vectors, int ambient_dim, double tol) {
    SpanBasis out(ambient_dim);
    for (const auto &v : vectors) {
        out.try_add(v, tol);
    }
    return out;
}

double span_membership(const CMat &m, const SpanBasis &basis) {
    return basis.residual(m);
}

double span_distance(const SpanBasis &a, const SpanBasis &b) {
    double worst = 0;
    for (const auto &e : a.elements()) {
        worst = std::max(worst, b.residual(e));
    }
    for (const auto &e : b.elements()) {
        worst = std::max(worst, a.residual(e));
    }
    return worst;
}

SpanBasis full_matrix_basis(int dim) {
    std::vector<CMat> units;
    units.reserve(static_cast<std::size_t>(dim) * dim);
    double s = std::sqrt(static_cast<double>(dim));
    for (int j = 0; j < dim; j++) {
        for (int i = 0; i < dim; i++) {
            CMat e = CMat::Zero(dim, dim);
            e(i, j) = s;
            units.push_back(std::move(e));
        }
    }
    return SpanBasis::from_orthonormal(dim, std::move(units));
}

SpanBasis generate_algebra(std::span<const CMat> generators, int ambient_dim, double tol) {
    std::vector<CMat> gens;
    for (const auto &g : generators) {
        gens.push_back(g);
        if (!is_hermitian(g, 1e-12)) {
            gens.push_back(g.adjoint());
        }
    }
    SpanBasis basis(ambient_dim);
    basis.try_add(identity(ambient_dim), tol);
    std::vector<CMat> frontier = basis.elements();
    std::size_t cap = static_cast<std::size_t>(ambient_dim) * ambient_dim;
    while (!frontier.empty() && basis.size() < cap) {
        std::vector<CMat> next;
        for (const auto &f : frontier) {
            for (const auto &g : gens) {
                if (basis.try_add(g * f, tol)) {
                    next.push_back(basis.elements().back());
                }
            }
        }
        frontier = std::move(next);
    }
    return basis;
}

SpanBasis center(const SpanBasis &algebra, std::span<const CMat> generators, double tol) {
    return relative_commutant(generators, algebra, tol);
}

CMat SimpleDecomposition::to_factor(const CMat &m) const {
    CMat big = w.adjoint() * m * w;
    CMat small(d, d);
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            small(a, b) = big(a * mu, b * mu);
        }
    }
    return small;
}

CMat SimpleDecomposition::from_factor(const CMat &small) const {
    CMat big = CMat::Zero(d * mu, d * mu);
    for (int a = 0; a < d; a++) {
        for (int b = 0; b < d; b++) {
            for (int j = 0; j < mu; j++) {
                big(a * mu + j, b * mu + j) = small(a, b);
            }
        }
    }
    return w * big * w.adjoint();
}

SimpleDecomposition decompose_simple(const SpanBasis &basis, std::uint64_t seed, double tol) {
    int dim = basis.ambient_dim();
    int m = static_cast<int>(basis.size());
    int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
    if (d * d != m || dim % d != 0) {
        fail(Errc::NotSimple, "linear dimension " + std::to_string(m) + " is not d^2 with d | " + std::to_string(dim));
    }
    int mu = dim / d;
    std::mt19937_64 rng(seed);

    // Two random elements generate the algebra almost surely.
    std::vector<CMat> probes;
    for (int k = 0; k < 2; k++) {
        CMat r = detail::random_element(basis, rng);
        probes.push_back(r.adjoint());
        probes.push_back(std::move(r));
    }
    SpanBasis z = relative_commutant(probes, basis, 1e-9);
    if (z.size() > 1) {
        fail(Errc::NotSimple, "center has dimension " + std::to_string(z.size()));
    }

    for (int attempt = 0; attempt < 5; attempt++) {
        CMat k = detail::hermitian_part(detail::random_element(basis, rng));
        Eigen::SelfAdjointEigenSolver<CMat> es(k);
        const auto &vals = es.eigenvalues();
        double spread = std::max(1.0, vals(vals.size() - 1) - vals(0));
        auto clusters = detail::eigen_clusters(vals, 1e-7 * spread);
        bool shaped = static_cast<int>(clusters.size()) == d &&
                      std::all_of(clusters.begin(), clusters.end(), [&](auto c) { return c.second == mu; });
        if (!shaped) {
            continue;
        }
        const CMat &v = es.eigenvectors();
        CMat x = detail::random_element(basis, rng);
        CMat v1 = v.middleCols(clusters[0].first, mu);
        CMat w(dim, dim);
        w.middleCols(0, mu) = v1;
        bool ok = true;
        for (int a = 1; a < d && ok; a++) {
            CMat va = v.middleCols(clusters[a].first, mu);
            CMat y = va * (va.adjoint() * (x * v1));
            double c = y.col(0).norm();
            if (c < 1e-6) {
                ok = false;
                break;
            }
            w.middleCols(a * mu, mu) = y / c;
        }
        if (!ok) {
            continue;
        }
        SimpleDecomposition out{d, mu, w, 0};
        if (!is_unitary(w, 1e-8)) {
            continue;
        }
        double worst = 0;
        for (const auto &b : basis.elements()) {
            worst = std::max(worst, hs_norm(out.from_factor(out.to_factor(b)) - b));
        }
        out.residual = worst;
        if (worst < tol) {
            return out;
        }
    }
    fail(Errc::NotSimple, "no block structure M_" + std::to_string(d) + " (x) 1_" + std::to_string(mu) +
                              " found after 5 draws");
}

}  // namespace qising
