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

#include <random>

#include "oracles.hpp"
#include "qising/error.hpp"
#include "qising/pauli.hpp"

namespace {

using namespace qising;

CMat dense_oracle(const PauliString &p, int n) {
    CMat out = CMat::Identity(1, 1);
    for (int q = 0; q < n; q++) {
        CMat site = CMat::Identity(2, 2);
        if ((p.x >> q) & 1) {
            site = site * oracle::pauli(1);
        }
        if ((p.z >> q) & 1) {
            site = site * oracle::pauli(3);
        }
        out = oracle::kron(site, out);
    }
    static const cplx phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return phases[p.phase & 3] * out;
}

PauliString random_pauli(std::mt19937_64 &rng, int n) {
    std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return {rng() & mask, rng() & mask, static_cast<std::uint8_t>(rng() & 3)};
}

TEST(PauliString, DenseMatchesKronecker) {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; k++) {
        PauliString p = random_pauli(rng, 4);
        EXPECT_LT(oracle::hs(p.to_dense(4) - dense_oracle(p, 4)), 1e-15);
    }
}

TEST(PauliString, SingleQubitExamples) {
    PauliString x{1, 0, 0};
    PauliString z{0, 1, 0};
    EXPECT_LT(oracle::hs(x.to_dense(1) - oracle::pauli(1)), 1e-15);
    EXPECT_LT(oracle::hs(z.to_dense(1) - oracle::pauli(3)), 1e-15);
    EXPECT_FALSE(x.commutes_with(z));
    EXPECT_EQ((z * x).str(1), "+iY");
    EXPECT_EQ((x * z).str(1), "-iY");
    EXPECT_EQ(x.str(1), "+X");
}

TEST(PauliString, ProductMatchesDense) {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; k++) {
        PauliString a = random_pauli(rng, 5);
        PauliString b = random_pauli(rng, 5);
        CMat da = dense_oracle(a, 5);
        CMat db = dense_oracle(b, 5);
        EXPECT_LT(oracle::hs((a * b).to_dense(5) - da * db), 1e-14);
        bool commute = oracle::hs(da * db - db * da) < 1e-12;
        EXPECT_EQ(a.commutes_with(b), commute);
        EXPECT_EQ(a.is_hermitian(), oracle::hs(da - da.adjoint()) < 1e-12);
        EXPECT_LT(oracle::hs(a.adjoint().to_dense(5) - da.adjoint()), 1e-14);
    }
}

TEST(PauliString, ExactTraceAndCoefficient) {
    std::mt19937_64 rng(3);
    CMat m = oracle::random_matrix(8, rng);
    for (int k = 0; k < 40; k++) {
        PauliString p = random_pauli(rng, 3);
        CMat d = dense_oracle(p, 3);
        auto [re, im] = p.ntrace_exact();
        cplx t = d.trace() / 8.0;
        EXPECT_EQ(re, static_cast<int>(std::lround(t.real())));
        EXPECT_EQ(im, static_cast<int>(std::lround(t.imag())));
        cplx expect = (d.adjoint() * m).trace() / 8.0;
        EXPECT_LT(std::abs(p.coefficient_in(m) - expect), 1e-13);
    }
}

TEST(SignedPermutation, FromDenseAndProduct) {
    PauliString a{0b101, 0b011, 0};
    PauliString b{0b010, 0b110, 2};
    auto pa = SignedPermutation::from_dense(a.to_dense(3));
    auto pb = SignedPermutation::from_dense(b.to_dense(3));
    EXPECT_EQ(pa * pb, SignedPermutation::from_dense(a.to_dense(3) * b.to_dense(3)));
    EXPECT_EQ(-pa, SignedPermutation::from_dense(-a.to_dense(3)));
    EXPECT_EQ(SignedPermutation::identity(8).dim(), 8u);
    PauliString x{1, 0, 0};
    auto px = SignedPermutation::from_dense(x.to_dense(1));
    EXPECT_EQ(px * px, SignedPermutation::identity(2));
}

TEST(SignedPermutation, RejectsComplexEntries) {
    PauliString x{1, 0, 1};
    EXPECT_THROW(SignedPermutation::from_dense(x.to_dense(1)), Error);
}

}  // namespace
