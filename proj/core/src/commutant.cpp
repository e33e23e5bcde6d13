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

#include "detail.hpp"
#include "qising/error.hpp"
#include "qising/matrixcore.hpp"

namespace qising {

namespace {

// Eigenvectors of a PSD Gram matrix whose eigenvalue is below tol * scale.
CMat null_vectors(const CMat &gram, double tol) {
    Eigen::SelfAdjointEigenSolver<CMat> es(detail::hermitian_part(gram));
    double scale = std::max(1.0, gram.diagonal().real().maxCoeff());
    Eigen::Index n = 0;
    while (n < es.eigenvalues().size() && es.eigenvalues()(n) < tol * scale) {
        n++;
    }
    return es.eigenvectors().leftCols(n);
}

bool is_scalar(const CMat &m) {
    cplx t = ntrace(m);
    return hs_norm(m - t * identity(static_cast<int>(m.rows()))) < 1e-12;
}

}  // namespace

// X commuting with span(B) also commutes with a random Hermitian K in span(B), so X is
// block diagonal over the eigenspaces of K. The remaining conditions [X, b] = 0 are
// imposed on the block unknowns through their Gram matrix.
SpanBasis commutant(const SpanBasis &basis, double tol, std::uint64_t seed) {
    int dim = basis.ambient_dim();
    std::vector<const CMat *> active;
    for (const auto &b : basis.elements()) {
        if (!is_scalar(b)) {
            active.push_back(&b);
        }
    }
    if (active.empty()) {
        return full_matrix_basis(dim);
    }
    std::mt19937_64 rng(seed);
    CMat k = detail::hermitian_part(detail::random_element(basis, rng));
    Eigen::SelfAdjointEigenSolver<CMat> es(k);
    const auto &vals = es.eigenvalues();
    double spread = std::max(1.0, vals(dim - 1) - vals(0));
    auto clusters = detail::eigen_clusters(vals, 1e-6 * spread);
    const CMat &v = es.eigenvectors();

    std::vector<std::pair<int, int>> unknowns;
    for (auto [start, count] : clusters) {
        for (int q = start; q < start + count; q++) {
            for (int p = start; p < start + count; p++) {
                unknowns.emplace_back(p, q);
            }
        }
    }
    auto nu = static_cast<Eigen::Index>(unknowns.size());
    CMat gram = CMat::Zero(nu, nu);
    for (const CMat *b : active) {
        CMat bp = v.adjoint() * (*b) * v;
        CMat bbs = bp * bp.adjoint();
        CMat bsb = bp.adjoint() * bp;
        for (Eigen::Index i = 0; i < nu; i++) {
            auto [p, q] = unknowns[i];
            for (Eigen::Index j = 0; j < nu; j++) {
                auto [r, s] = unknowns[j];
                cplx g = -bp(p, r) * std::conj(bp(q, s)) - std::conj(bp(r, p)) * bp(s, q);
                if (p == r) {
                    g += bbs(s, q);
                }
                if (q == s) {
                    g += bsb(p, r);
                }
                gram(i, j) += g;
            }
        }
    }
    CMat nulls = null_vectors(gram, tol);
    std::vector<CMat> out;
    double s = std::sqrt(static_cast<double>(dim));
    for (Eigen::Index c = 0; c < nulls.cols(); c++) {
        CMat xp = CMat::Zero(dim, dim);
        for (Eigen::Index i = 0; i < nu; i++) {
            xp(unknowns[i].first, unknowns[i].second) = nulls(i, c);
        }
        out.push_back(s * (v * xp * v.adjoint()));
    }
    return SpanBasis::from_orthonormal(dim, std::move(out));
}

SpanBasis relative_commutant(std::span<const CMat> constraints, const SpanBasis &within, double tol) {
    int dim = within.ambient_dim();
    auto m = static_cast<Eigen::Index>(within.size());
    if (constraints.empty() || m == 0) {
        return within;
    }
    CMat gram = CMat::Zero(m, m);
    CMat cols(static_cast<Eigen::Index>(dim) * dim, m);
    for (const auto &c : constraints) {
        if (c.rows() != dim) {
            fail(Errc::ShapeMismatch, "constraint dimension differs from the ambient dimension");
        }
        for (Eigen::Index i = 0; i < m; i++) {
            CMat k = commutator(within[i], c);
            cols.col(i) = Eigen::Map<const CVec>(k.data(), k.size());
        }
        gram += cols.adjoint() * cols / static_cast<double>(dim);
    }
    CMat nulls = null_vectors(gram, tol);
    std::vector<CMat> out;
    for (Eigen::Index c = 0; c < nulls.cols(); c++) {
        out.push_back(within.combine(nulls.col(c)));
    }
    return SpanBasis::from_orthonormal(dim, std::move(out));
}

}  // namespace qising
