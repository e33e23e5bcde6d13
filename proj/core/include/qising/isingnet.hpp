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

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qising/matrixcore.hpp"
#include "qising/pauli.hpp"
#include "qising/spacetime.hpp"

namespace qising {

/// Finite window of qubit sites [x_min, x_max] onto the infinite chain.
struct ChainConfig {
    int x_min = -3;
    int x_max = 3;
    int padding = 0;
    int max_qubits = 12;

    int n_qubits() const {
        return x_max - x_min + 1;
    }
    int dim() const {
        return 1 << n_qubits();
    }
    /// Throws OutOfWindow or InvalidArgument.
    void validate() const;
};

struct Generator {
    HalfIndex index;
    PauliString symbol;
    CMat matrix;
};

/// Closed interval of generator indices, lo <= hi.
struct Interval {
    HalfIndex lo;
    HalfIndex hi;

    int size() const {
        return hi.twice() - lo.twice() + 1;
    }
    bool contains(HalfIndex i) const {
        return lo <= i && i <= hi;
    }
    HalfIndex at(int k) const {
        return lo.shifted(k);
    }
};

struct LocalAlgebra {
    Region region;
    SpanBasis basis;
    int lin_dim = 0;
};

/// Linear combination of monoms of one interval; bit k of a key selects generator lo + k/2.
struct MonomExpansion {
    Interval interval;
    std::vector<std::pair<std::uint64_t, cplx>> terms;
    double residual = 0;
};

struct HaagReport {
    SpanBasis expected;
    int computed_commutant_dim = 0;
    bool match = false;
    bool informative = true;
    double distance = 0;
};

class IsingNet {
   public:
    explicit IsingNet(ChainConfig cfg);

    const ChainConfig &config() const {
        return cfg_;
    }
    int n_qubits() const {
        return cfg_.n_qubits();
    }
    int dim() const {
        return cfg_.dim();
    }
    Interval window() const {
        return {HalfIndex::integer(cfg_.x_min), HalfIndex::integer(cfg_.x_max)};
    }
    bool has_generator(HalfIndex i) const {
        return window().contains(i);
    }
    std::vector<HalfIndex> generator_indices() const;

    PauliString symbol(HalfIndex i) const;
    CMat matrix(HalfIndex i) const;
    Generator generator(HalfIndex i) const;
    SignedPermutation signed_permutation(HalfIndex i) const;

    PauliString monom_symbol(const Interval &iv, std::uint64_t subset) const;
    CMat monom(const Interval &iv, std::uint64_t subset) const;
    SpanBasis monom_basis(const Interval &iv) const;

    /// Coefficients of `m` on the monoms of `iv` and the HS norm of what is left over.
    MonomExpansion expand(const CMat &m, const Interval &iv, double drop = 1e-14) const;

    LocalAlgebra interval_algebra(const Interval &iv) const;
    LocalAlgebra one_point_algebra(HalfIndex i) const;
    std::pair<CMat, CMat> minimal_projections(HalfIndex i) const;

   private:
    void require(const Interval &iv) const;

    ChainConfig cfg_;
    std::map<HalfIndex, CMat> dense_;
};

struct RelationReport {
    int pairs = 0;
    int violations = 0;
    bool pass() const {
        return violations == 0;
    }
};

/// U_i = U_i*, U_i^2 = 1 and the (anti)commutation pattern over every index pair, checked
/// on signed permutations in integer arithmetic.
RelationReport relation_check(const IsingNet &net);

std::map<HalfIndex, Generator> build_generators(const ChainConfig &cfg);

/// Dense Pauli string acting on one qubit site of the window (1: X, 3: Z).
PauliString site_pauli(const ChainConfig &cfg, int site, int which);

/// Commutant, inside the window algebra, of every window generator spacelike to `iv`
/// together with the edge truncations sigma_z(x_min), sigma_z(x_max).
HaagReport haag_duality_check(const IsingNet &net, const Interval &iv);

}  // namespace qising
