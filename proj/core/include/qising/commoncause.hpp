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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qising/dynamics.hpp"
#include "qising/probspace.hpp"

namespace qising {

/// N, a simple subalgebra N1 and its relative commutant N2 = N1' n N.
class TensorSplit {
   public:
    TensorSplit(SpanBasis n_basis, SpanBasis n1_basis, std::uint64_t seed = 5);

    const SpanBasis &n() const {
        return n_;
    }
    const SpanBasis &n1() const {
        return n1_;
    }
    const SpanBasis &n2() const {
        return n2_;
    }
    const SimpleDecomposition &iso2() const {
        return iso2_;
    }
    /// max ||[x, y]|| over basis elements x of N1 and y of N2.
    double commute_defect() const;

   private:
    SpanBasis n_;
    SpanBasis n1_;
    SpanBasis n2_;
    SimpleDecomposition iso2_;
};

struct CommonCauseCertificate {
    CMat c;
    double t_prime = 0;
    ScreeningResult screening;
    std::optional<Region> localization;
    double localization_residual = 0;
    bool nontrivial = false;
    ReichenbachReport reichenbach;
    double commutator_a = 0;
    double commutator_b = 0;
    bool commutes_with_a = false;
    bool commutes_with_b = false;
    bool events_swapped = false;
    /// ||C A C - C|| for the A used after the swap step.
    double subprojection_defect = 0;
    double correlation = 0;
    double target = 0;
    double f_at_0 = 0;
    double f_at_1 = 0;
    int iterations = 0;
};

/// C(t) = A U(t) B U(t)* and F(t) along the unitary path of the construction.
class Lemma1Path {
   public:
    /// `a` and `b` are the events after the swap step.
    Lemma1Path(const TensorSplit &split, const State &phi, CMat a, CMat b);

    CMat unitary(double t) const;
    CMat c(double t) const;
    double f(double t) const;
    double target() const {
        return target_;
    }
    /// phi(A - C(t)), the denominator of F.
    double denominator(double t) const;

   private:
    SimpleDecomposition iso_;
    State phi_;
    CMat a_, b_, b_perp_;
    CMat log_v_;
    double target_ = 0;
};

struct Lemma1Options {
    double tol = 1e-8;
    double dt = 1e-12;
    double df = 1e-11;
    int max_iterations = 200;
};

CommonCauseCertificate lemma1_construct(const TensorSplit &split, const State &phi, const CMat &a, const CMat &b,
                                        const Lemma1Options &opt = {});

struct Prop2Regions {
    Region a_left;
    Region b_right;
    Region joined;
    Region extended;
    /// extended n wpast(O_a, O_b).
    Region localization;
};

struct Prop2Result {
    CommonCauseCertificate certificate;
    Prop2Regions regions;
    /// span distance between A(extended) and the algebra generated by the localization cones.
    double causality_residual = 0;
    std::size_t n_center_dim = 0;
};

/// Regions of the weak-past construction for O_a to the left of O_b. Throws
/// RegionSelectionFailure when none fit the window.
Prop2Regions prop2_regions(const Region &o_a, const Region &o_b, const Automorphism &dyn);

/// Picks the regions of the weak-past construction and runs lemma1_construct on them.
Prop2Result prop2_pipeline(const Region &o_a, const Region &o_b, const CMat &a, const CMat &b,
                           const Automorphism &dyn, const State &phi, const Lemma1Options &opt = {});

/// The adjacent-cone scenario: O_a = O^m_{-1/2} + (1,0), O_b = O^m_{1/2} + (1,0).
struct AdjacentScenario {
    Region o_a;
    Region o_b;
    CMat a;
    CMat b;
};

AdjacentScenario adjacent_scenario(const Automorphism &dyn, int sign_a = 1, int sign_b = 1);

/// Window on which the adjacent scenario and its weak-past construction fit.
ChainConfig adjacent_window();

struct U0Entry {
    DynamicsParams params;
    double residual = 0;
    double correlation = 0;
    double commutator_a = 0;
    double commutator_b = 0;
};

struct U0Report {
    std::array<double, 4> lambdas{};
    std::vector<U0Entry> entries;
    double max_residual = 0;
    bool preconditions_met = false;
    std::string caveat;
};

struct U0Options {
    /// Reject lambdas with l1 != l2 instead of reporting.
    bool strict = true;
    int parallel = 1;
};

U0Report u0_universal_check(const std::vector<DynamicsParams> &grid, const std::array<double, 4> &lambdas,
                            const U0Options &opt = {});

std::vector<DynamicsParams> dynamics_grid(const std::vector<double> &thetas, const std::vector<int> &etas);

struct CandidateReport {
    double residual = 0;
    bool trivial = false;
};

CandidateReport evaluate_candidate(const State &phi, const CMat &a, const CMat &b, const CMat &c);

struct SearchOptions {
    int restarts = 20;
    int iterations = 4000;
    std::uint64_t seed = 1;
};

struct SearchReport {
    double best_residual = 0;
    CMat best_c;
    bool best_trivial = false;
    std::size_t commutant_dim = 0;
    std::vector<double> restart_residuals;
    int restarts = 0;
    bool claims_nonexistence = false;
    std::string caveat;
};

/// Heuristic search for a commuting common cause {C, C'} inside `target`.
SearchReport commuting_cc_search(const State &phi, const CMat &a, const CMat &b, const SpanBasis &target,
                                 const SearchOptions &opt = {});

}  // namespace qising
