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

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include <unsupported/Eigen/KroneckerProduct>

#include "qising/commoncause.hpp"

namespace {

using namespace qising;

CMat random_hermitian(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMat m(d, d);
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            double re = g(rng);
            double im = g(rng);
            m(i, j) = cplx(re, im);
        }
    }
    return m + m.adjoint();
}

void BM_Commutant(benchmark::State &state) {
    auto net = std::make_shared<const IsingNet>(adjacent_window());
    Automorphism dyn(net, {0.4, 1.1, 1, 1});
    Region o = Region::rect(-1, 1, -2, 1);
    std::vector<CMat> gens;
    for (const auto &c : o.minimals()) {
        gens.push_back(dyn.cone_operator(c));
    }
    SpanBasis span = orthonormalize(gens, net->dim(), 1e-12);
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutant(span).size());
    }
}

// range(0) is n(O)
void BM_ConeAlgebra(benchmark::State &state) {
    auto net = std::make_shared<const IsingNet>(adjacent_window());
    Automorphism dyn(net, {0.4, 1.1, 1, 1});
    const std::vector<Region> regions{Region::rect(0, 0, 0, 0),   Region::rect(-1, 0, 0, 0),
                                      Region::rect(-1, 0, -1, 0), Region::rect(-1, 1, -1, 0),
                                      Region::rect(-1, 1, -1, 1), Region::rect(-1, 1, -2, 1)};
    const Region &o = regions[static_cast<std::size_t>(state.range(0) - 1)];
    for (auto _ : state) {
        benchmark::DoNotOptimize(cone_algebra(o, dyn).lin_dim);
    }
}

// range(0) is the factor size d of M_d (x) M_d
void BM_TensorSplitCause(benchmark::State &state) {
    int d = static_cast<int>(state.range(0));
    std::mt19937_64 rng(3);
    std::vector<CMat> left;
    for (int i = 0; i < d; i++) {
        for (int j = 0; j < d; j++) {
            CMat e = CMat::Zero(d, d);
            e(i, j) = 1;
            left.push_back(Eigen::kroneckerProduct(e, CMat::Identity(d, d)).eval());
        }
    }
    TensorSplit split(full_matrix_basis(d * d), orthonormalize(left, d * d));
    auto projector = [&](bool first) {
        Eigen::SelfAdjointEigenSolver<CMat> es(random_hermitian(d, rng));
        CMat v = es.eigenvectors().leftCols(1);
        CMat p = v * v.adjoint();
        CMat one = CMat::Identity(d, d);
        return first ? Eigen::kroneckerProduct(p, one).eval() : Eigen::kroneckerProduct(one, p).eval();
    };
    CMat a = projector(true);
    CMat b = projector(false);
    CMat g = random_hermitian(d * d, rng);
    CMat rho = g * g + 0.05 * CMat::Identity(d * d, d * d);
    State phi(rho / ntrace(rho));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lemma1_construct(split, phi, a, b).t_prime);
    }
}

}  // namespace

BENCHMARK(BM_Commutant)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConeAlgebra)->DenseRange(1, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TensorSplitCause)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
