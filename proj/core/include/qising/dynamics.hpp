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

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qising/isingnet.hpp"

namespace qising {

/// Parameters of the causal unit-time automorphism beta.
struct DynamicsParams {
    double theta1 = 0.4;
    double theta2 = 1.1;
    int eta1 = 1;
    int eta2 = 1;

    /// theta in (-pi/2, pi/2], eta in {+1, -1}.
    void validate() const;
    std::string str() const;

    static DynamicsParams trivial();
};

struct PowerRange {
    int min_power = -1;
    int max_power = 1;
};

/// beta^p on generators for p in a power range, cached at construction.
///
/// The cone labelled (x, t) carries the algebra generated by beta^{-t}(U_x): moving a
/// cone one unit forward in time applies beta^{-1} to its operators. Negative powers
/// come from a linear solve over the monoms of a neighbouring interval.
class Automorphism {
   public:
    Automorphism(std::shared_ptr<const IsingNet> net, DynamicsParams params, PowerRange range = {});

    const DynamicsParams &params() const {
        return params_;
    }
    const IsingNet &net() const {
        return *net_;
    }
    std::shared_ptr<const IsingNet> net_ptr() const {
        return net_;
    }
    const PowerRange &range() const {
        return range_;
    }

    bool has_image(HalfIndex i, int power) const;
    /// beta^power(U_i). Throws OutOfWindow when the window cannot support it.
    const CMat &image(HalfIndex i, int power) const;

    /// beta(U_x) for integer x.
    const CMat &beta_on_integer(int x) const;
    /// beta(U_{x+1/2}).
    const CMat &beta_on_half(int x) const;

    /// beta^power applied to an element of the algebra of `hint`.
    CMat apply(const CMat &m, const Interval &hint, int power) const;
    CMat apply(const CMat &m, const Region &hint, int power) const;

    CMat cone_operator(const MinimalCone &c) const;

   private:
    void build_forward(int level);
    void build_inverse(int level);
    CMat solve_inverse(HalfIndex i) const;

    std::shared_ptr<const IsingNet> net_;
    DynamicsParams params_;
    PowerRange range_;
    std::map<std::pair<int, int>, CMat> cache_;
};

/// Generators beta^power acts on when `m` is supported on the Cauchy slice of `hint`.
Interval cauchy_span(const Region &hint);

CMat apply_automorphism(const Automorphism &dyn, const CMat &m, const Region &hint, int power);

/// Relabels U_i -> U_{i+steps}; the operator must act trivially where sites leave the window.
CMat alpha_shift(const IsingNet &net, const CMat &m, int steps);

/// Algebra generated by the cone operators of every minimal cone of `o`. For double cones
/// the linear dimension must be 2^{n(O)} and the centre 1- or 2-dimensional.
LocalAlgebra cone_algebra(const Region &o, const Automorphism &dyn);

struct CausalityEntry {
    Region v;
    Region completion;
    double residual = 0;
};

struct CausalityReport {
    std::vector<CausalityEntry> entries;
    double max_residual = 0;
};

/// Compares A(V) with A(V'') for every triple of neighbouring cones on the t = 0 slice
/// that the window supports.
CausalityReport local_primitive_causality_check(const Automorphism &dyn);

}  // namespace qising
