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

#include <array>
#include <optional>
#include <vector>

#include "qising/matrixcore.hpp"
#include "qising/spacetime.hpp"

namespace qising {

/// Metadata of a member of the correlated family rho = l1 AB + l2 A'B' + l3 A'B + l4 AB'.
struct CorrStateInfo {
    std::array<double, 4> lambdas{};
    /// l1 + l2 == l3 + l4.
    bool sum_restriction = false;
    /// l1 l2 rational, l3 l4 irrational: not decidable in floating point, never checked.
    bool rationality_checked = false;
};

/// Density matrix with respect to the normalized trace.
class State {
   public:
    /// Validates rho = rho*, rho >= 0 and ntrace(rho) = 1.
    explicit State(CMat rho, std::optional<CorrStateInfo> info = std::nullopt, double tol = 1e-10);

    static State tracial(int dim);

    const CMat &rho() const {
        return rho_;
    }
    int dim() const {
        return static_cast<int>(rho_.rows());
    }
    double faithful_margin() const {
        return margin_;
    }
    bool faithful() const {
        return margin_ > 1e-12;
    }
    const std::optional<CorrStateInfo> &corr_info() const {
        return info_;
    }

   private:
    CMat rho_;
    double margin_ = 0;
    std::optional<CorrStateInfo> info_;
};

/// Mutually orthogonal projections summing to the identity.
class Partition {
   public:
    explicit Partition(std::vector<CMat> projections, double tol = 1e-10);

    static Partition from_projection(const CMat &c);

    const std::vector<CMat> &cells() const {
        return cells_;
    }
    std::size_t size() const {
        return cells_.size();
    }

   private:
    std::vector<CMat> cells_;
};

struct EventPair {
    CMat a;
    CMat b;
    Region region_a;
    Region region_b;

    /// Checks projections, [A, B] = 0 and spacelike regions.
    void validate(double tol = 1e-10) const;
};

cplx evaluate(const State &phi, const CMat &m);

CMat complement(const CMat &p);

State build_corr_state(const CMat &a, const CMat &b, const std::array<double, 4> &lambdas, double tol = 1e-10);

/// Re(phi(AB) - phi(A) phi(B)).
double correlation(const State &phi, const CMat &a, const CMat &b, double tol = 1e-10);

CMat conditional_expectation(const Partition &part, const CMat &m);

struct ScreeningResult {
    std::vector<double> residuals;
    double max_residual = 0;

    bool pass(double tol) const {
        return max_residual < tol;
    }
};

/// |phi(C AB C) phi(C A'B' C) - phi(C AB' C) phi(C A'B C)| for every cell C.
ScreeningResult screening_check(const State &phi, const CMat &a, const CMat &b, const Partition &part);

/// The same products written with phi o E applied to X C_k.
ScreeningResult screening_via_expectation(const State &phi, const CMat &a, const CMat &b, const Partition &part);

/// The same products with phi o E replaced by phi, i.e. phi(X C_k).
ScreeningResult screening_plain(const State &phi, const CMat &a, const CMat &b, const Partition &part);

struct ReichenbachReport {
    double p_a_c = 0, p_a_cperp = 0;
    double p_b_c = 0, p_b_cperp = 0;
    double screen_c_residual = 0;
    double screen_cperp_residual = 0;
    bool screen_c = false;
    bool screen_cperp = false;
    bool pos_impact_a = false;
    bool pos_impact_b = false;
};

/// Conditional probabilities p(X|C) = phi(C X C)/phi(C). For C commuting with X this is
/// phi(XC)/phi(C).
ReichenbachReport reichenbach_flags(const State &phi, const CMat &a, const CMat &b, const CMat &c, double tol = 1e-10);

/// Classical-style check; C must commute with A and B.
ReichenbachReport reichenbach_check(const State &phi, const CMat &a, const CMat &b, const CMat &c, double tol = 1e-10);

/// True when every cell is a subprojection of one of A, A', B, B'.
bool triviality_check(const Partition &part, const CMat &a, const CMat &b, double tol = 1e-10);

/// Smallest ||C X C - C|| over X in {A, A', B, B'}.
double subprojection_distance(const CMat &c, const CMat &a, const CMat &b);

}  // namespace qising
