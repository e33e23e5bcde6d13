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

#include <cmath>
#include <string>

#include "qising/error.hpp"
#include "qising/oscillator.hpp"

namespace qising {

void FockTruncation::validate() const {
    if (n_levels < 4) {
        fail(Errc::TruncationTooSmall, "n_levels = " + std::to_string(n_levels) + " < 4");
    }
    if (!(hbar > 0) || !(m > 0) || !(omega > 0)) {
        fail(Errc::InvalidArgument, "hbar, m and omega must be positive");
    }
}

Eigen::VectorXd energies(const FockTruncation &tr) {
    tr.validate();
    Eigen::VectorXd e(tr.n_levels);
    for (int n = 0; n < tr.n_levels; n++) {
        e(n) = tr.hbar * tr.omega * (n + 0.5);
    }
    return e;
}

CMat position_operator(const FockTruncation &tr) {
    tr.validate();
    double scale = std::sqrt(tr.hbar / (2 * tr.m * tr.omega));
    CMat x = CMat::Zero(tr.n_levels, tr.n_levels);
    for (int n = 0; n + 1 < tr.n_levels; n++) {
        x(n, n + 1) = x(n + 1, n) = scale * std::sqrt(n + 1.0);
    }
    return x;
}

CMat position_operator_hermite(const FockTruncation &tr) {
    tr.validate();
    std::vector<double> norm(static_cast<std::size_t>(tr.n_levels) + 1);
    for (int n = 0; n <= tr.n_levels; n++) {
        norm[n] = 1 / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0));
    }
    // xi H_n = H_{n+1} / 2 + n H_{n-1} with xi = sqrt(m omega / hbar) x
    double length = std::sqrt(tr.hbar / (tr.m * tr.omega));
    CMat x = CMat::Zero(tr.n_levels, tr.n_levels);
    for (int n = 0; n < tr.n_levels; n++) {
        if (n + 1 < tr.n_levels) {
            x(n + 1, n) = length * 0.5 * norm[n] / norm[n + 1];
        }
        if (n > 0) {
            x(n - 1, n) = length * n * norm[n] / norm[n - 1];
        }
    }
    return x;
}

CMat evolved_position(const FockTruncation &tr, double t) {
    Eigen::VectorXd e = energies(tr);
    CVec u(tr.n_levels);
    for (int n = 0; n < tr.n_levels; n++) {
        u(n) = std::exp(cplx(0, e(n) * t));
    }
    return u.conjugate().asDiagonal() * position_operator(tr) * u.asDiagonal();
}

CMat scaled_commutator(const FockTruncation &tr, double t) {
    CMat x = position_operator(tr);
    return (tr.m * tr.omega / tr.hbar) * commutator(x, evolved_position(tr, t));
}

cplx commutator_groundstate(const FockTruncation &tr, double t) {
    return scaled_commutator(tr, t)(0, 0);
}

cplx psi2_coefficient(const FockTruncation &tr, double t) {
    return scaled_commutator(tr, t)(2, 0);
}

cplx psi2_printed_formula(const FockTruncation &tr, double t) {
    Eigen::VectorXd e = energies(tr);
    return (std::exp(cplx(0, (e(0) - e(1)) * t)) - std::exp(cplx(0, (e(1) - e(2)) * t))) / std::sqrt(2.0);
}

}  // namespace qising
