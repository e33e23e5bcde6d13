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

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qising/matrixcore.hpp"

// Reference computations used as independent oracles in the tests. Everything here is
// written directly against Eigen, without the library's own algebra helpers.
namespace oracle {

using qising::CMat;
using qising::cplx;

inline CMat pauli(int which) {
    CMat p = CMat::Zero(2, 2);
    switch (which) {
        case 0:
            p = CMat::Identity(2, 2);
            break;
        case 1:
            p(0, 1) = p(1, 0) = 1;
            break;
        case 2:
            p(0, 1) = cplx(0, -1);
            p(1, 0) = cplx(0, 1);
            break;
        default:
            p(0, 0) = 1;
            p(1, 1) = -1;
    }
    return p;
}

inline CMat kron(const CMat &a, const CMat &b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Tensor product over qubits with qubit 0 as the least significant bit of the index.
inline CMat on_qubits(const std::vector<int> &ops) {
    CMat out = CMat::Identity(1, 1);
    for (int op : ops) {
        out = kron(pauli(op), out);
    }
    return out;
}

// Generator U_i of the chain on sites [x_min, x_max], built from Kronecker products.
inline CMat generator(int x_min, int x_max, int twice_index) {
    int n = x_max - x_min + 1;
    std::vector<int> ops(n, 0);
    if (twice_index % 2 == 0) {
        ops[twice_index / 2 - x_min] = 1;
    } else {
        int x = (twice_index - 1) / 2;  // exact: twice_index - 1 is even
        ops[x - x_min] = 3;
        ops[x + 1 - x_min] = 3;
    }
    return on_qubits(ops);
}

inline double hs(const CMat &m) {
    return m.norm() / std::sqrt(static_cast<double>(m.rows()));
}

inline CMat random_matrix(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMat m(d, d);
    for (Eigen::Index i = 0; i < m.size(); i++) {
        double re = g(rng);
        double im = g(rng);
        m(i) = cplx(re, im);
    }
    return m;
}

inline CMat random_hermitian(int d, std::mt19937_64 &rng) {
    CMat m = random_matrix(d, rng);
    return 0.5 * (m + m.adjoint());
}

inline CMat random_unitary(int d, std::mt19937_64 &rng) {
    Eigen::HouseholderQR<CMat> qr(random_matrix(d, rng));
    return qr.householderQ() * CMat::Identity(d, d);
}

// Taylor series with scaling and squaring.
inline CMat series_expm(const CMat &k, int order = 20) {
    int squarings = 0;
    double n = k.norm();
    while (n > 0.5) {
        n /= 2;
        squarings++;
    }
    CMat a = k / std::pow(2.0, squarings);
    CMat term = CMat::Identity(k.rows(), k.cols());
    CMat sum = term;
    for (int j = 1; j <= order; j++) {
        term = term * a / static_cast<double>(j);
        sum += term;
    }
    for (int s = 0; s < squarings; s++) {
        sum = sum * sum;
    }
    return sum;
}

// Null space of X -> [X, b] for every b, from an SVD of the stacked Kronecker maps.
// Returns the dimension; the basis is written to `basis` when requested.
inline int kron_commutant_dim(const std::vector<CMat> &ops, std::vector<CMat> *basis = nullptr, double tol = 1e-9) {
    auto d = ops.front().rows();
    CMat id = CMat::Identity(d, d);
    CMat stacked(static_cast<Eigen::Index>(ops.size()) * d * d, d * d);
    for (std::size_t k = 0; k < ops.size(); k++) {
        stacked.middleRows(static_cast<Eigen::Index>(k) * d * d, d * d) =
            kron(ops[k].transpose(), id) - kron(id, ops[k]);
    }
    Eigen::JacobiSVD<CMat> svd(stacked, Eigen::ComputeFullV);
    const auto &s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); i++) {
        if (s(i) > tol * std::max(1.0, s(0))) {
            rank++;
        }
    }
    int null = static_cast<int>(d * d) - rank;
    if (basis) {
        basis->clear();
        for (Eigen::Index c = rank; c < d * d; c++) {
            CMat x(d, d);
            for (Eigen::Index i = 0; i < d * d; i++) {
                x(i % d, i / d) = svd.matrixV()(i, c);
            }
            basis->push_back(x);
        }
    }
    return null;
}

// ||x - P x|| for P the orthogonal projector onto span(vs), using a QR of vectorized vs.
inline double span_residual(const std::vector<CMat> &vs, const CMat &x) {
    auto n = x.size();
    CMat cols(n, static_cast<Eigen::Index>(vs.size()));
    for (std::size_t k = 0; k < vs.size(); k++) {
        cols.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::VectorXcd>(vs[k].data(), n);
    }
    Eigen::Map<const Eigen::VectorXcd> v(x.data(), n);
    Eigen::VectorXcd coef = cols.colPivHouseholderQr().solve(v);
    return (cols * coef - v).norm() / std::sqrt(static_cast<double>(x.rows()));
}

// Linear span of all words in `gens` (closed under products), by plain Gram-Schmidt on vectorized matrices.
inline std::vector<CMat> algebra_closure(const std::vector<CMat> &gens, double tol = 1e-9) {
    auto d = gens.front().rows();
    std::vector<Eigen::VectorXcd> ortho;
    std::vector<CMat> words;
    auto add = [&](const CMat &m) {
        Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(m.data(), m.size());
        double in = v.norm();
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &o : ortho) {
                v -= o.dot(v) * o;
            }
        }
        if (v.norm() <= tol * std::max(1.0, in)) {
            return false;
        }
        ortho.push_back(v / v.norm());
        words.push_back(m);
        return true;
    };
    add(CMat::Identity(d, d));
    std::vector<CMat> frontier = words;
    while (!frontier.empty()) {
        std::vector<CMat> next;
        for (const auto &f : frontier) {
            for (const auto &g : gens) {
                CMat w = f * g;
                if (add(w)) {
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return words;
}

// Dimension of the centre of span(words) for linearly independent words, given generators of that algebra.
inline int center_dim(const std::vector<CMat> &words, const std::vector<CMat> &gens, double tol = 1e-9) {
    auto d = words.front().rows();
    CMat sys(static_cast<Eigen::Index>(gens.size()) * d * d, static_cast<Eigen::Index>(words.size()));
    for (std::size_t k = 0; k < words.size(); k++) {
        for (std::size_t g = 0; g < gens.size(); g++) {
            CMat c = words[k] * gens[g] - gens[g] * words[k];
            sys.block(static_cast<Eigen::Index>(g) * d * d, static_cast<Eigen::Index>(k), d * d, 1) =
                Eigen::Map<const Eigen::VectorXcd>(c.data(), c.size());
        }
    }
    Eigen::JacobiSVD<CMat> svd(sys);
    const auto &s = svd.singularValues();
    int rank = 0;
    double scale = std::max(1.0, s.size() ? s(0) : 0.0);
    for (Eigen::Index i = 0; i < s.size(); i++) {
        if (s(i) > tol * scale) {
            rank++;
        }
    }
    return static_cast<int>(words.size()) - rank;
}

}  // namespace oracle
