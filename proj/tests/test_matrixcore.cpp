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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qising/error.hpp"
#include "qising/matrixcore.hpp"

namespace {

using namespace qising;

TEST(HermitianEig, IdentityAndDiagonal) {
    EigenSystem id = hermitian_eig(identity(2));
    EXPECT_DOUBLE_EQ(id.values(0), 1);
    EXPECT_DOUBLE_EQ(id.values(1), 1);
    EXPECT_LT(hs_norm(id.vectors * id.vectors.adjoint() - identity(2)), 1e-14);

    CMat d = CMat::Zero(2, 2);
    d(0, 0) = 3;
    d(1, 1) = 1;
    EigenSystem es = hermitian_eig(d);
    EXPECT_DOUBLE_EQ(es.values(0), 1);
    EXPECT_DOUBLE_EQ(es.values(1), 3);
    EXPECT_NEAR(std::abs(es.vectors(1, 0)), 1, 1e-14);
}

TEST(HermitianEig, RandomReconstruction) {
    std::mt19937_64 rng(3);
    for (int d : {2, 5, 16}) {
        CMat h = oracle::random_hermitian(d, rng);
        EigenSystem es = hermitian_eig(h);
        for (int k = 1; k < d; k++) {
            EXPECT_LE(es.values(k - 1), es.values(k));
        }
        CMat back = es.vectors * es.values.cast<cplx>().asDiagonal() * es.vectors.adjoint();
        EXPECT_LT(hs_norm(back - h), 1e-10);
    }
}

TEST(HermitianEig, RejectsNonHermitian) {
    CMat m = CMat::Zero(2, 2);
    m(0, 1) = 1;
    try {
        hermitian_eig(m);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::NotHermitian);
    }
}

TEST(UnitaryLog, Examples) {
    EXPECT_LT(hs_norm(unitary_log(identity(3))), 1e-14);
    CMat v = CMat::Zero(2, 2);
    v(0, 0) = cplx(0, 1);
    v(1, 1) = cplx(0, -1);
    CMat k = unitary_log(v);
    EXPECT_NEAR(std::abs(k(0, 0) - cplx(0, std::numbers::pi / 2)), 0, 1e-12);
    EXPECT_NEAR(std::abs(k(1, 1) - cplx(0, -std::numbers::pi / 2)), 0, 1e-12);
}

TEST(UnitaryLog, MinusOneMapsToPlusPi) {
    CMat k = unitary_log(-identity(2));
    EXPECT_NEAR(std::abs(k(0, 0) - cplx(0, std::numbers::pi)), 0, 1e-12);
    EXPECT_NEAR(std::abs(k(1, 1) - cplx(0, std::numbers::pi)), 0, 1e-12);
}

TEST(UnitaryLog, RandomRoundTrip) {
    std::mt19937_64 rng(5);
    for (int d : {2, 4, 8, 32}) {
        CMat v = oracle::random_unitary(d, rng);
        CMat k = unitary_log(v);
        EXPECT_LT(hs_norm(k + k.adjoint()), 1e-12);
        EXPECT_LT(hs_norm(oracle::series_expm(k) - v), 1e-9);
        EXPECT_LT(hs_norm(expm(k) - v), 1e-9);
        Eigen::ComplexEigenSolver<CMat> es(k);
        for (Eigen::Index j = 0; j < d; j++) {
            double ph = es.eigenvalues()(j).imag();
            EXPECT_GT(ph, -std::numbers::pi);
            EXPECT_LE(ph, std::numbers::pi + 1e-12);
        }
    }
}

TEST(UnitaryLog, RejectsNonUnitary) {
    try {
        unitary_log(2 * identity(2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::NotUnitary);
    }
}

TEST(Expm, Examples) {
    EXPECT_LT(hs_norm(expm(CMat::Zero(3, 3)) - identity(3)), 1e-15);
    std::mt19937_64 rng(7);
    CMat k = oracle::random_matrix(4, rng);
    EXPECT_LT(hs_norm(expm(k) * expm(-k) - identity(4)), 1e-10);
}

TEST(Expm, SkewMatchesSeries) {
    std::mt19937_64 rng(9);
    for (int d : {2, 6, 16}) {
        CMat h = oracle::random_hermitian(d, rng);
        CMat k = cplx(0, 1) * h;
        CMat u = expm(k);
        EXPECT_TRUE(is_unitary(u, 1e-10));
        EXPECT_LT(hs_norm(u - oracle::series_expm(k)), 1e-8);
    }
}

TEST(Expm, NonNormalMatchesSeries) {
    CMat k = CMat::Zero(3, 3);
    k(0, 1) = 1;
    k(1, 2) = 2;
    k(0, 0) = 0.3;
    EXPECT_LT(hs_norm(expm(k) - oracle::series_expm(k)), 1e-10);
}

TEST(IsProjection, Examples) {
    EXPECT_TRUE(is_projection(identity(2)));
    CMat sx = oracle::pauli(1);
    EXPECT_TRUE(is_projection(0.5 * (identity(2) + sx)));
    EXPECT_FALSE(is_projection(0.5 * sx));
}

TEST(SpanBasis, Membership) {
    std::vector<CMat> zs{identity(2), oracle::pauli(3)};
    SpanBasis b = orthonormalize(zs, 2);
    EXPECT_EQ(b.size(), 2u);
    EXPECT_LT(span_membership(oracle::pauli(3), b), 1e-15);
    EXPECT_NEAR(span_membership(oracle::pauli(1), b), 1, 1e-14);
    EXPECT_LT(b.gram_defect(), 1e-14);
    EXPECT_TRUE(b.is_star_closed());

    std::mt19937_64 rng(1);
    SpanBasis full = full_matrix_basis(4);
    EXPECT_EQ(full.size(), 16u);
    EXPECT_LT(full.gram_defect(), 1e-14);
    EXPECT_LT(span_membership(oracle::random_matrix(4, rng), full), 1e-12);
}

TEST(SpanBasis, DropsDependentVectors) {
    std::vector<CMat> v{oracle::pauli(1), 2.0 * oracle::pauli(1), oracle::pauli(1) + oracle::pauli(3)};
    EXPECT_EQ(orthonormalize(v, 2).size(), 2u);
}

TEST(Commutant, Identity) {
    std::vector<CMat> one{identity(4)};
    EXPECT_EQ(commutant(orthonormalize(one, 4)).size(), 16u);
}

TEST(Commutant, FullAlgebraGivesScalars) {
    SpanBasis c = commutant(full_matrix_basis(4));
    ASSERT_EQ(c.size(), 1u);
    cplx t = ntrace(c[0]);
    EXPECT_LT(hs_norm(c[0] - t * identity(4)), 1e-10);
}

TEST(Commutant, SigmaXTensorOne) {
    CMat x1 = oracle::kron(identity(2), oracle::pauli(1));
    std::vector<CMat> gens{identity(4), x1};
    SpanBasis c = commutant(orthonormalize(gens, 4));
    std::vector<CMat> brute;
    EXPECT_EQ(oracle::kron_commutant_dim({x1}, &brute), 8);
    ASSERT_EQ(c.size(), 8u);
    for (const auto &e : c.elements()) {
        EXPECT_LT(oracle::span_residual(brute, e), 1e-9);
        EXPECT_LT(hs_norm(commutator(e, x1)), 1e-10);
    }
}

TEST(Commutant, RandomAlgebrasAgreeWithKroneckerOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 4; trial++) {
        // W (M_2 (x) 1_2 + 1_2 (x) diag) W*, a non-factor algebra of M_4
        CMat w = oracle::random_unitary(4, rng);
        CMat p = CMat::Zero(2, 2);
        p(0, 0) = 1;
        std::vector<CMat> gens{w * oracle::kron(oracle::random_hermitian(2, rng), identity(2)) * w.adjoint(),
                               w * oracle::kron(identity(2), p) * w.adjoint()};
        if (trial % 2) {
            gens.pop_back();
        }
        SpanBasis alg = generate_algebra(gens, 4);
        SpanBasis c = commutant(alg);
        std::vector<CMat> brute;
        int dim = oracle::kron_commutant_dim(alg.elements(), &brute);
        ASSERT_EQ(static_cast<int>(c.size()), dim);
        for (const auto &e : c.elements()) {
            EXPECT_LT(oracle::span_residual(brute, e), 1e-8);
        }
    }
}

TEST(Commutant, BicommutantAtDimension64) {
    std::mt19937_64 rng(13);
    CMat w = oracle::random_unitary(64, rng);
    std::vector<CMat> gens;
    for (int k = 0; k < 2; k++) {
        gens.push_back(w * oracle::kron(identity(4), oracle::random_hermitian(16, rng)) * w.adjoint());
    }
    SpanBasis alg = generate_algebra(gens, 64);
    ASSERT_EQ(alg.size(), 256u);
    SpanBasis c = commutant(alg);
    ASSERT_EQ(c.size(), 16u);
    SpanBasis cc = commutant(c);
    ASSERT_EQ(cc.size(), 256u);
    EXPECT_LT(span_distance(cc, alg), 1e-8);
}

TEST(RelativeCommutantAndCenter, BlockDiagonalAlgebra) {
    CMat p = CMat::Zero(2, 2);
    p(0, 0) = 1;
    std::vector<CMat> gens{oracle::kron(p, oracle::pauli(1)), oracle::kron(p, oracle::pauli(3)),
                           oracle::kron(identity(2) - p, identity(2))};
    SpanBasis alg = generate_algebra(gens, 4);
    EXPECT_EQ(alg.size(), 5u);  // M_2 + C
    EXPECT_EQ(center(alg, gens).size(), 2u);
}

TEST(DecomposeSimple, FullAlgebra) {
    SimpleDecomposition s = decompose_simple(full_matrix_basis(4));
    EXPECT_EQ(s.d, 4);
    EXPECT_EQ(s.mu, 1);
    EXPECT_LT(s.residual, 1e-8);
    EXPECT_TRUE(is_unitary(s.w));
}

TEST(DecomposeSimple, TensorWithIdentity) {
    std::vector<CMat> gens{oracle::kron(identity(2), oracle::pauli(1)), oracle::kron(identity(2), oracle::pauli(3))};
    SpanBasis alg = generate_algebra(gens, 4);
    SimpleDecomposition s = decompose_simple(alg);
    EXPECT_EQ(s.d, 2);
    EXPECT_EQ(s.mu, 2);
    for (const auto &b : alg.elements()) {
        EXPECT_LT(hs_norm(s.from_factor(s.to_factor(b)) - b), 1e-8);
    }
}

TEST(DecomposeSimple, ConjugatedFactor) {
    std::mt19937_64 rng(17);
    CMat w = oracle::random_unitary(12, rng);
    std::vector<CMat> gens;
    for (int k = 0; k < 2; k++) {
        gens.push_back(w * oracle::kron(identity(4), oracle::random_hermitian(3, rng)) * w.adjoint());
    }
    SimpleDecomposition s = decompose_simple(generate_algebra(gens, 12));
    EXPECT_EQ(s.d, 3);
    EXPECT_EQ(s.mu, 4);
    EXPECT_LT(s.residual, 1e-8);
    // the factor map is a *-homomorphism
    CMat a = s.to_factor(gens[0]);
    CMat b = s.to_factor(gens[1]);
    EXPECT_LT(hs_norm(s.to_factor(gens[0] * gens[1]) - a * b), 1e-8);
}

TEST(DecomposeSimple, RejectsNonSimple) {
    CMat p = CMat::Zero(2, 2);
    p(0, 0) = 1;
    std::vector<CMat> gens{p};
    try {
        decompose_simple(generate_algebra(gens, 2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::NotSimple);
    }
}

}  // namespace
