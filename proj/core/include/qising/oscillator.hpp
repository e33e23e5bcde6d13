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

#include "qising/matrixcore.hpp"

namespace qising {

/// Harmonic oscillator restricted to the lowest n_levels number states.
struct FockTruncation {
    int n_levels = 8;
    double hbar = 1;
    double m = 1;
    double omega = 1;
    /// TruncationTooSmall below 4 levels, InvalidArgument for non-positive units.
    void validate() const;
};

/// E_n = hbar omega (n + 1/2).
Eigen::VectorXd energies(const FockTruncation &tr);

/// x from ladder operators: sqrt(hbar / (2 m omega)) (a + a*).
CMat position_operator(const FockTruncation &tr);

/// x from the Hermite recursion and the normalisation 1/sqrt(2^n n!).
CMat position_operator_hermite(const FockTruncation &tr);

/// U(-t) x U(t) with U(t) = exp(iHt).
CMat evolved_position(const FockTruncation &tr, double t);

/// (m omega / hbar) [x, x(t)] as a matrix.
CMat scaled_commutator(const FockTruncation &tr, double t);

/// Coefficient of psi_0 in (m omega / hbar) [x, x(t)] psi_0.
cplx commutator_groundstate(const FockTruncation &tr, double t);

/// Coefficient of psi_2 in (m omega / hbar) [x, x(t)] psi_0.
cplx psi2_coefficient(const FockTruncation &tr, double t);

/// (exp(i(E0 - E1)t) - exp(i(E1 - E2)t)) / sqrt(2).
cplx psi2_printed_formula(const FockTruncation &tr, double t);

}  // namespace qising
