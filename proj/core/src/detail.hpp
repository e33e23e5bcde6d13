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

#include <random>
#include <utility>
#include <vector>

#include "qising/matrixcore.hpp"

namespace qising::detail {

// Runs of eigenvalues closer than `gap`. Pairs of (first index, count).
inline std::vector<std::pair<int, int>> eigen_clusters(const Eigen::VectorXd &values, double gap) {
    std::vector<std::pair<int, int>> out;
    int start = 0;
    for (int k = 1; k <= values.size(); k++) {
        if (k == values.size() || values(k) - values(k - 1) > gap) {
            out.emplace_back(start, k - start);
            start = k;
        }
    }
    return out;
}

inline cplx normal_cplx(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    double re = g(rng);
    double im = g(rng);
    return {re, im};
}

// Random complex combination of the basis elements.
inline CMat random_element(const SpanBasis &basis, std::mt19937_64 &rng) {
    CVec c(basis.size());
    for (auto &v : c) {
        v = normal_cplx(rng);
    }
    return basis.combine(c);
}

inline CMat hermitian_part(const CMat &m) {
    return 0.5 * (m + m.adjoint());
}

inline double frob(const CMat &m) {
    return m.norm();
}

}  // namespace qising::detail
